//! Reduced Gröbner bases under graded revlex, and random coordinate changes.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::monideal::MonomialIdeal;
use crate::ring::{ExponentVector, Polynomial, Ring};
use crate::{Error, Result};

/// A reduced Gröbner basis: monic elements, sorted by decreasing leading term,
/// no term of any element divisible by another element's leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn leading_exponents(&self) -> Vec<ExponentVector> {
        self.elements.iter().map(|g| g.lead_exp().clone()).collect()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            ((i + 1)..g.len()).all(|j| reduce(&s_poly_unchecked(&g[i], &g[j]), g).is_zero())
        })
    }

    /// Membership of `f` in the ideal.
    pub fn contains(&self, f: &Polynomial) -> bool {
        reduce(f, &self.elements).is_zero()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuchbergerOptions {
    /// Skip a pair `(i, j)` when some `k` has `lt(g_k) | lcm` and both `(i, k)` and
    /// `(j, k)` have already been treated.
    pub chain_criterion: bool,
}

/// `(lcm/lt(f))·f − (lcm/lt(g))·g` for monic-normalized `f`, `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::usage("s_polynomial: polynomials live in different rings"));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::usage("s_polynomial of the zero polynomial"));
    }
    Ok(s_poly_unchecked(&f.monic(), &g.monic()))
}

fn s_poly_unchecked(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let lcm = lf.lcm(lg);
    let left = Polynomial::zero(ring).add_scaled_shifted(ring.inv(cf), &lcm.sub(lf), f);
    left.add_scaled_shifted(ring.neg(ring.inv(cg)), &lcm.sub(lg), g)
}

/// Full reduction of `f` by `basis`: the remainder has no term divisible by a
/// leading monomial of `basis`. Zero elements of `basis` are ignored.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = f.clone();
    let mut remainder: Vec<(ExponentVector, u32)> = Vec::new();
    while let Some((lead, c)) = rest.terms().first().cloned() {
        match divisors.iter().find(|g| g.lead_exp().divides(&lead)) {
            Some(g) => {
                let (lg, cg) = g.leading_term().expect("nonzero");
                let factor = ring.neg(ring.mul(c, ring.inv(cg)));
                rest = rest.add_scaled_shifted(factor, &lead.sub(lg), g);
            }
            None => {
                remainder.push((lead, c));
                rest = Polynomial::from_sorted(ring, rest.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted(ring, remainder)
}

fn check_intake(gens: &[Polynomial]) -> Result<Option<Arc<Ring>>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let ring = first.ring().clone();
    for (index, g) in gens.iter().enumerate() {
        if *g.ring() != ring {
            return Err(Error::usage("generators live in different rings"));
        }
        if let Some((low, high)) = g.degree_range() {
            if low != high {
                return Err(Error::NotHomogeneous { index, low, high });
            }
        }
    }
    Ok(Some(ring))
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_with(gens, BuchbergerOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], opts: BuchbergerOptions) -> Result<GroebnerBasis> {
    let Some(ring) = check_intake(gens)? else {
        return Err(Error::usage("buchberger needs at least one generator to fix the ring"));
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    // input is interreduced first so the pair queue starts small
    let mut sorted: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    sorted.sort_by(|a, b| a.lead_exp().revlex_cmp(b.lead_exp()));
    for g in sorted {
        let h = reduce(&g, &basis);
        if !h.is_zero() {
            push_element(&mut basis, &mut pending, h.monic());
        }
    }

    while let Some(idx) = select_pair(&basis, &pending) {
        let (i, j) = pending.swap_remove(idx);
        let (li, lj) = (basis[i].lead_exp(), basis[j].lead_exp());
        if li.is_coprime(lj) {
            continue;
        }
        if opts.chain_criterion && chain_redundant(&basis, &pending, i, j) {
            continue;
        }
        let h = reduce(&s_poly_unchecked(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            push_element(&mut basis, &mut pending, h.monic());
        }
    }

    let elements = interreduce(basis);
    let gb = GroebnerBasis { ring, elements };
    debug_assert!(gb.satisfies_buchberger_criterion());
    Ok(gb)
}

fn push_element(basis: &mut Vec<Polynomial>, pending: &mut Vec<(usize, usize)>, h: Polynomial) {
    let k = basis.len();
    basis.push(h);
    pending.extend((0..k).map(|i| (i, k)));
}

/// Normal strategy: smallest lcm degree, ties broken by revlex on the lcm, then indices.
fn select_pair(basis: &[Polynomial], pending: &[(usize, usize)]) -> Option<usize> {
    let key = |&(i, j): &(usize, usize)| basis[i].lead_exp().lcm(basis[j].lead_exp());
    (0..pending.len()).min_by(|&a, &b| {
        let (la, lb) = (key(&pending[a]), key(&pending[b]));
        la.revlex_cmp(&lb).then(pending[a].cmp(&pending[b]))
    })
}

fn chain_redundant(basis: &[Polynomial], pending: &[(usize, usize)], i: usize, j: usize) -> bool {
    let lcm = basis[i].lead_exp().lcm(basis[j].lead_exp());
    let is_pending = |a: usize, b: usize| pending.contains(&(a.min(b), a.max(b)));
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lead_exp().divides(&lcm)
            && !is_pending(i, k)
            && !is_pending(j, k)
    })
}

/// Drop elements with redundant leading terms, then tail-reduce the rest.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lead = g.lead_exp();
        let redundant = basis.iter().enumerate().any(|(h, other)| {
            h != k
                && other.lead_exp().divides(lead)
                && (other.lead_exp() != lead || h < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(h, _)| *h != k)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| b.lead_exp().revlex_cmp(a.lead_exp()));
    reduced
}

/// The monomial ideal generated by the leading monomials of a reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.ring.n(), gb.leading_exponents())
}

/// A linear substitution `x_j ↦ Σ_{h ≤ j} m_{jh} x_h` on the first `k` variables.
///
/// Sampled matrices are lower triangular with nonzero diagonal and nonzero
/// strictly-lower entries, hence always invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    k: usize,
    /// Row-major `k × k`.
    matrix: Vec<u32>,
}

impl LinearChange {
    pub fn identity(k: usize) -> Self {
        let mut matrix = vec![0; k * k];
        for j in 0..k {
            matrix[j * k + j] = 1;
        }
        LinearChange { k, matrix }
    }

    pub fn sample(k: usize, p: u32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut matrix = vec![0; k * k];
        for j in 0..k {
            for h in 0..=j {
                matrix[j * k + h] = rng.random_range(1..p);
            }
        }
        LinearChange { k, matrix }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Coefficient of `x_h` in the image of `x_j` (0-based).
    pub fn entry(&self, j: usize, h: usize) -> u32 {
        self.matrix[j * self.k + h]
    }

    /// Hex SHA-256 of the matrix entries, for retry logs.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.k as u64).to_le_bytes());
        for e in &self.matrix {
            hasher.update(e.to_le_bytes());
        }
        hex::encode(&hasher.finalize()[..8])
    }

    pub fn apply(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        gens.iter().map(|f| self.apply_one(f)).collect()
    }

    fn apply_one(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = f.ring();
        let n = ring.n();
        if self.k > n {
            return Err(Error::usage(format!(
                "coordinate change on {} variables in a ring of {n}",
                self.k
            )));
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|j| {
                if j >= self.k {
                    return Polynomial::variable(ring, j);
                }
                let terms = (0..=j)
                    .filter(|&h| self.entry(j, h) != 0)
                    .map(|h| (ExponentVector::unit(n, h), i64::from(self.entry(j, h))));
                Polynomial::from_terms(ring, terms)
            })
            .collect();
        // cache powers of each image as they are needed
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::monomial(ring, ExponentVector::zero(n), 1)]).collect();
        let mut out = Polynomial::zero(ring);
        for (exp, c) in f.terms() {
            let mut term = Polynomial::monomial(ring, ExponentVector::zero(n), *c);
            for (j, &e) in exp.entries().iter().enumerate() {
                let cache = &mut powers[j];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[j]);
                    cache.push(next);
                }
                if e > 0 {
                    term = term.mul_unchecked(&cache[e as usize]);
                }
            }
            out = out.plus(&term)?;
        }
        Ok(out)
    }
}

/// Substitute a random invertible lower-triangular change of `x_1..x_k` into `gens`.
pub fn random_linear_change(gens: &[Polynomial], k: usize, seed: u64) -> Result<Vec<Polynomial>> {
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Ok(Vec::new());
    };
    if k == 0 || k > ring.n() {
        return Err(Error::usage(format!("k = {k} outside 1..={}", ring.n())));
    }
    LinearChange::sample(k, ring.modulus(), seed).apply(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn polys(ring: &Arc<Ring>, texts: &[&str]) -> Vec<Polynomial> {
        texts.iter().map(|t| parse_polynomial(ring, t).unwrap()).collect()
    }

    fn ring(n: usize) -> Arc<Ring> {
        Ring::with_vars(32003, n).unwrap()
    }

    const TWISTED: [&str; 3] = ["x1^2 - x2*x3", "x2^2 - x1*x4", "x1*x2 - x3*x4"];

    #[test]
    fn s_polynomial_basics() {
        let r = ring(2);
        let g = polys(&r, &["x1^2", "x2^3"]);
        let s = s_polynomial(&g[0], &g[1]).unwrap();
        assert!(reduce(&s, &g).is_zero());
        assert!(s_polynomial(&g[0], &g[0]).unwrap().is_zero());
        assert!(s_polynomial(&g[0], &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn twisted_cubic_pairs_reduce_to_zero() {
        let r = ring(4);
        let g = polys(&r, &TWISTED);
        // S(f1, f2) with coprime leads x1^2, x2^2
        let s12 = s_polynomial(&g[0], &g[1]).unwrap();
        assert_eq!(s12, parse_polynomial(&r, "-x2^3*x3 + x1^3*x4").unwrap());
        assert!(reduce(&s12, &g).is_zero());
        for (a, b) in [(0, 2), (1, 2)] {
            assert!(reduce(&s_polynomial(&g[a], &g[b]).unwrap(), &g).is_zero());
        }
        // standard coordinates: the pair of minors reduces to 0 by the three minors
        let minors = polys(&r, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        let s = s_polynomial(&minors[0], &minors[1]).unwrap();
        assert_eq!(s, parse_polynomial(&r, "-x1*x3^2 + x1*x2*x4").unwrap());
        assert!(reduce(&s, &minors).is_zero());
    }

    #[test]
    fn reduction_examples() {
        let r = ring(4);
        let f = parse_polynomial(&r, "x1*x2 - x3*x4").unwrap();
        assert!(reduce(&f, std::slice::from_ref(&f)).is_zero());
        let g = polys(&r, &["x1*x2"]);
        assert!(reduce(&parse_polynomial(&r, "x1^2*x2").unwrap(), &g).is_zero());
        assert_eq!(reduce(&f, &[]), f);
        let basis = polys(&r, &TWISTED);
        let s = parse_polynomial(&r, "x2^3*x3 - x1^3*x4").unwrap();
        assert!(reduce(&s, &basis).is_zero());
    }

    #[test]
    fn remainder_has_no_reducible_terms() {
        let r = ring(3);
        let basis = polys(&r, &["x1^2 - x2*x3", "x2^2 - x3^2"]);
        let f = parse_polynomial(&r, "x1^3*x2 + 5*x1*x2^2*x3 + x3^4 + x2^4").unwrap();
        let rem = reduce(&f, &basis);
        for (e, _) in rem.terms() {
            assert!(basis.iter().all(|g| !g.leading_term().unwrap().0.divides(e)));
        }
    }

    #[test]
    fn curve_family_basis() {
        let r = ring(4);
        let gens = polys(
            &r,
            &[
                "x1*x2 - x3*x4",
                "x1^2*x3^3 - x2^5",
                "x1^3*x3^2 - x2^4*x4",
                "x1^4*x3 - x2^3*x4^2",
                "x1^5 - x2^2*x4^3",
            ],
        );
        let gb = buchberger(&gens).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        let expected = MonomialIdeal::new(
            4,
            [[1, 1, 0, 0], [0, 5, 0, 0], [3, 0, 2, 0], [4, 0, 1, 0], [5, 0, 0, 0]]
                .into_iter()
                .map(ExponentVector::from),
        );
        assert_eq!(initial_ideal(&gb), expected);
        assert_eq!(gb.elements().len(), 5);
    }

    #[test]
    fn already_reduced_inputs() {
        let r = ring(2);
        let gens = polys(&r, &["x1^2", "x2^3"]);
        let gb = buchberger(&gens).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.elements().iter().all(|g| gens.contains(g)));

        let r4 = ring(4);
        let tw = polys(&r4, &TWISTED);
        let gb = buchberger(&tw).unwrap();
        assert_eq!(gb.elements().len(), 3);
        assert!(tw.iter().all(|g| gb.elements().contains(g)));
        let expected = MonomialIdeal::new(4, [[2, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0]].map(ExponentVector::from));
        assert_eq!(initial_ideal(&gb), expected);
        assert_eq!(initial_ideal(&buchberger(&polys(&r, &["x1^2"])).unwrap()).gens(), &[ExponentVector::from([2, 0])]);
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let r = ring(2);
        let gens = polys(&r, &["x1^2", "x1 - x2^2"]);
        assert!(matches!(buchberger(&gens), Err(Error::NotHomogeneous { index: 1, low: 1, high: 2 })));
    }

    #[test]
    fn chain_criterion_gives_same_basis() {
        let r = ring(4);
        let gens = polys(&r, &["x1^2 - x3*x4", "x1*x2 - x2*x3", "x2^3 - x4^3", "x1*x3^2 + x2*x4^2"]);
        let plain = buchberger(&gens).unwrap();
        let chained = buchberger_with(&gens, BuchbergerOptions { chain_criterion: true }).unwrap();
        assert_eq!(plain, chained);
        assert!(plain.satisfies_buchberger_criterion());
        assert!(plain.elements().iter().all(|g| g.is_homogeneous()));
    }

    #[test]
    fn coordinate_change_makes_x1_leading() {
        let r = ring(2);
        let gens = polys(&r, &["x1*x2"]);
        for c in [1u32, 2, 31999] {
            let change = LinearChange { k: 2, matrix: vec![1, 0, c, 1] };
            let image = change.apply(&gens).unwrap();
            let gb = buchberger(&image).unwrap();
            assert_eq!(initial_ideal(&gb).gens(), &[ExponentVector::from([2, 0])]);
        }
        let moved = random_linear_change(&gens, 2, 0).unwrap();
        assert_eq!(moved[0].leading_term().unwrap().0, &ExponentVector::from([2, 0]));
    }

    #[test]
    fn identity_change_is_a_no_op() {
        let r = ring(4);
        let gens = polys(&r, &TWISTED);
        assert_eq!(LinearChange::identity(4).apply(&gens).unwrap(), gens);
    }

    #[test]
    fn change_leaves_trailing_variables_alone() {
        let r = ring(4);
        let change = LinearChange::sample(2, 32003, 7);
        for j in 2..4 {
            let image = change.apply(&[Polynomial::variable(&r, j)]).unwrap();
            assert_eq!(image[0], Polynomial::variable(&r, j));
        }
        let x2 = change.apply(&[Polynomial::variable(&r, 1)]).unwrap();
        assert!(x2[0].terms().iter().all(|(e, _)| e.entries()[2] == 0 && e.entries()[3] == 0));
        assert_eq!(change.digest().len(), 16);
        assert_eq!(change, LinearChange::sample(2, 32003, 7));
        assert!(random_linear_change(&[Polynomial::variable(&r, 0)], 5, 0).is_err());
    }
}
