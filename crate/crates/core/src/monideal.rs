//! Monomial ideals given by their minimal generators.
//!
//! Variable indices are 0-based throughout: `var = j` refers to `x_{j+1}`.
//! The evaluations `J_i` (trailing variables set to 0) and `J̃_i` (the last
//! remaining variable additionally set to 1) live here, together with the
//! graded counting used by `r(I)` and by the oracle.

use std::fmt;

use crate::ring::ExponentVector;

/// A monomial ideal in `s` variables, stored as a sorted antichain of exponent vectors.
///
/// No generators means the zero ideal; the generator `(0, ..., 0)` means the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    s: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalize an arbitrary set of monomials.
    pub fn new<I>(s: usize, monomials: I) -> Self
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut all: Vec<ExponentVector> = monomials.into_iter().collect();
        assert!(all.iter().all(|m| m.len() == s), "monomial length differs from {s}");
        all.sort_by_key(|m| m.degree());
        all.dedup();
        let mut gens: Vec<ExponentVector> = Vec::new();
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort();
        MonomialIdeal { s, gens }
    }

    pub fn zero(s: usize) -> Self {
        MonomialIdeal { s, gens: Vec::new() }
    }

    pub fn unit(s: usize) -> Self {
        MonomialIdeal {
            s,
            gens: vec![ExponentVector::zero(s)],
        }
    }

    /// Ambient number of variables.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        debug_assert_eq!(m.len(), self.s);
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `J_i`: keep generators free of the last `i` variables, drop those coordinates.
    pub fn evaluate_zero(&self, i: usize) -> Self {
        assert!(i <= self.s, "cannot evaluate {i} of {} variables", self.s);
        let k = self.s - i;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.entries()[k..].iter().all(|e| *e == 0))
            .map(|g| ExponentVector::new(g.entries()[..k].to_vec()))
            .collect();
        // an antichain stays an antichain after dropping all-zero coordinates
        MonomialIdeal { s: k, gens }
    }

    /// `J̃`: set the last variable to 1. The ambient count is kept; the last
    /// coordinate of every generator becomes 0.
    pub fn evaluate_one(&self) -> Self {
        assert!(self.s >= 1, "evaluate_one needs at least one variable");
        self.saturate_by_var(self.s - 1)
    }

    /// `J : x_var`.
    pub fn colon_by_var(&self, var: usize) -> Self {
        assert!(var < self.s);
        MonomialIdeal::new(
            self.s,
            self.gens.iter().map(|g| {
                let mut e = g.entries().to_vec();
                e[var] = e[var].saturating_sub(1);
                ExponentVector::new(e)
            }),
        )
    }

    /// `J : x_var^∞`.
    pub fn saturate_by_var(&self, var: usize) -> Self {
        assert!(var < self.s);
        MonomialIdeal::new(
            self.s,
            self.gens.iter().map(|g| {
                let mut e = g.entries().to_vec();
                e[var] = 0;
                ExponentVector::new(e)
            }),
        )
    }

    /// Componentwise maximum of the generators of `J_i`, i.e. the exponent of `g_i`.
    /// `None` when no generator survives the evaluation.
    pub fn lcm_gens(&self, i: usize) -> Option<ExponentVector> {
        let level = self.evaluate_zero(i);
        let mut it = level.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.s];
        for g in &self.gens {
            for (slot, e) in m.iter_mut().zip(g.entries()) {
                *slot = (*slot).max(*e);
            }
        }
        m
    }

    /// `S/J` has finite length: every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> bool {
        (0..self.s).all(|j| {
            self.gens
                .iter()
                .any(|g| g.entries().iter().enumerate().all(|(h, e)| h == j || *e == 0))
        })
    }

    /// Number of monomials of degree `r` outside the ideal.
    pub fn graded_dim_quotient(&self, r: u32) -> u64 {
        self.graded_dims_up_to(r)[r as usize]
    }

    /// `dim (S/J)_r` for `r = 0..=top`, from the Hilbert series numerator.
    pub fn graded_dims_up_to(&self, top: u32) -> Vec<u64> {
        let num = self.hilbert_numerator();
        (0..=top as usize)
            .map(|r| {
                let total: i128 = num
                    .iter()
                    .enumerate()
                    .take(r + 1)
                    .map(|(k, c)| i128::from(*c) * monomials_of_degree(self.s, r - k))
                    .sum();
                u64::try_from(total).expect("a Hilbert function is non-negative")
            })
            .collect()
    }

    /// Coefficients of `N(t)` with `HS_{S/J}(t) = N(t) / (1 − t)^s`.
    ///
    /// Pivot recursion `N(J) = N(J + (x_j^e)) + t^e N(J : x_j^e)` until the
    /// generators are pairwise coprime, where `N = ∏ (1 − t^{|g|})`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        numerator(self.s, self.gens.clone())
    }

    /// Brute-force `dim (S/J)_r` by listing standard monomials.
    pub fn graded_dims_by_enumeration(&self, top: u32) -> Vec<u64> {
        let mut counts = vec![0u64; top as usize + 1];
        self.walk_standard(0, top, &mut |m| counts[m.degree() as usize] += 1);
        counts
    }

    /// Every standard monomial with degree in `lo..=hi`.
    pub fn standard_monomials(&self, lo: u32, hi: u32) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        self.walk_standard(lo, hi, &mut |m| out.push(m.clone()));
        out
    }

    /// Depth-first enumeration of standard monomials with degree in `lo..=hi`.
    ///
    /// Coordinates are assigned left to right. A branch is cut as soon as some
    /// generator whose support lies in the assigned prefix already divides it,
    /// since every completion is then inside the ideal.
    fn walk_standard(&self, lo: u32, hi: u32, visit: &mut dyn FnMut(&ExponentVector)) {
        if self.s == 0 {
            if lo == 0 && !self.is_unit() {
                visit(&ExponentVector::zero(0));
            }
            return;
        }
        // last nonzero coordinate of each generator
        let support_end: Vec<usize> = self
            .gens
            .iter()
            .map(|g| g.entries().iter().rposition(|e| *e > 0).map_or(0, |p| p + 1))
            .collect();
        let mut cur = vec![0u32; self.s];
        self.walk_rec(0, 0, lo, hi, &support_end, &mut cur, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn walk_rec(
        &self,
        pos: usize,
        deg: u32,
        lo: u32,
        hi: u32,
        support_end: &[usize],
        cur: &mut Vec<u32>,
        visit: &mut dyn FnMut(&ExponentVector),
    ) {
        let dead = self.gens.iter().zip(support_end).any(|(g, &end)| {
            end <= pos && g.entries()[..end].iter().zip(cur.iter()).all(|(a, b)| a <= b)
        });
        if dead {
            return;
        }
        if pos == self.s {
            if deg >= lo {
                visit(&ExponentVector::new(cur.clone()));
            }
            return;
        }
        if pos + 1 == self.s {
            // last coordinate: only values that land in [lo, hi]
            let start = lo.saturating_sub(deg);
            for e in start..=(hi - deg) {
                cur[pos] = e;
                self.walk_rec(pos + 1, deg + e, lo, hi, support_end, cur, visit);
                // once a prefix is dead, larger last exponents stay dead
                if self.contains_prefix(cur, pos + 1, support_end) {
                    break;
                }
            }
            cur[pos] = 0;
            return;
        }
        for e in 0..=(hi - deg) {
            cur[pos] = e;
            self.walk_rec(pos + 1, deg + e, lo, hi, support_end, cur, visit);
        }
        cur[pos] = 0;
    }

    fn contains_prefix(&self, cur: &[u32], upto: usize, support_end: &[usize]) -> bool {
        self.gens.iter().zip(support_end).any(|(g, &end)| {
            end <= upto && g.entries()[..end].iter().zip(cur).all(|(a, b)| a <= b)
        })
    }

    /// Krull dimension of `S/J`: `s` minus the minimum number of variables meeting
    /// every generator's support. `None` for the unit ideal (empty quotient).
    pub fn krull_dim(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        if self.gens.is_empty() {
            return Some(self.s);
        }
        assert!(self.s <= 63, "vertex cover search is limited to 63 variables");
        let supports: Vec<u64> = self
            .gens
            .iter()
            .map(|g| {
                g.entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .fold(0u64, |acc, (j, _)| acc | (1 << j))
            })
            .collect();
        for size in 1..=self.s {
            if covers_of_size(self.s, size).any(|c| supports.iter().all(|s| s & c != 0)) {
                return Some(self.s - size);
            }
        }
        unreachable!("the full variable set covers every nonconstant generator")
    }
}

/// Number of monomials of degree `r` in `s` variables.
fn monomials_of_degree(s: usize, r: usize) -> i128 {
    if s == 0 {
        return i128::from(r == 0);
    }
    // C(r + s − 1, s − 1), built incrementally so every step divides exactly
    (1..s).fold(1i128, |acc, k| acc * (r + k) as i128 / k as i128)
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn numerator(s: usize, gens: Vec<ExponentVector>) -> Vec<i64> {
    let gens = minimalize(gens);
    // variable shared by the most generators
    let mut best: Option<(usize, usize)> = None;
    for j in 0..s {
        let count = gens.iter().filter(|g| g.entries()[j] > 0).count();
        if count >= 2 && best.is_none_or(|(_, c)| count > c) {
            best = Some((j, count));
        }
    }
    let Some((j, _)) = best else {
        let mut out = vec![1i64];
        for g in &gens {
            let mut next = out.clone();
            poly_sub_shifted(&mut next, &out, g.degree() as usize, -1);
            out = next;
        }
        return out;
    };
    let mut exps: Vec<u32> = gens.iter().map(|g| g.entries()[j]).filter(|e| *e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pivot = vec![0u32; s];
    pivot[j] = e;
    let pivot = ExponentVector::new(pivot);
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<ExponentVector> = gens
        .iter()
        .map(|g| {
            let mut v = g.entries().to_vec();
            v[j] = v[j].saturating_sub(e);
            ExponentVector::new(v)
        })
        .collect();
    let mut out = numerator(s, plus);
    poly_sub_shifted(&mut out, &numerator(s, colon), e as usize, 1);
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// All bitmasks over `s` bits with exactly `size` bits set, in increasing order.
fn covers_of_size(s: usize, size: usize) -> impl Iterator<Item = u64> {
    let first: u64 = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let limit: u64 = 1u64 << s;
    std::iter::successors(Some(first), move |&c| {
        if c == 0 {
            return None;
        }
        // Gosper's hack: next integer with the same popcount
        let lowest = c & c.wrapping_neg();
        let ripple = c + lowest;
        let next = (((ripple ^ c) >> 2) / lowest) | ripple;
        Some(next)
    })
    .take_while(move |&c| c < limit)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(s, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn numerator_matches_enumeration() {
        let cases = [
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 5, 0, 0], &[3, 0, 2, 0], &[4, 0, 1, 0], &[5, 0, 0, 0]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[2, 0, 2]]),
            ideal(2, &[&[0, 0]]),
            MonomialIdeal::zero(3),
            ideal(0, &[]),
        ];
        for j in &cases {
            assert_eq!(j.graded_dims_up_to(20), j.graded_dims_by_enumeration(20), "{j}");
        }
        assert_eq!(cases[0].hilbert_numerator().iter().sum::<i64>(), 0);
    }

    /// In(I_C) for the monomial curve with α = 5, β = 2.
    fn curve_initial() -> MonomialIdeal {
        ideal(4, &[&[1, 1, 0, 0], &[0, 5, 0, 0], &[3, 0, 2, 0], &[4, 0, 1, 0], &[5, 0, 0, 0]])
    }

    #[test]
    fn minimalize() {
        assert_eq!(ideal(2, &[&[1, 1], &[2, 1], &[0, 5]]).gens(), &[ev(&[0, 5]), ev(&[1, 1])]);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2], &[1, 1]]).gens().len(), 3);
        let raw = ideal(3, &[&[1, 1, 0], &[0, 5, 0], &[3, 0, 0], &[4, 0, 0], &[5, 0, 0]]);
        assert_eq!(raw, ideal(3, &[&[1, 1, 0], &[0, 5, 0], &[3, 0, 0]]));
    }

    #[test]
    fn membership() {
        let j = ideal(2, &[&[1, 1]]);
        assert!(j.contains(&ev(&[3, 1])));
        assert!(!j.contains(&ev(&[4, 0])));
        let j1 = curve_initial().evaluate_zero(1);
        assert!(!j1.contains(&ev(&[4, 0, 0])));
    }

    #[test]
    fn zero_evaluation() {
        let j = curve_initial();
        assert_eq!(j.evaluate_zero(2), ideal(2, &[&[1, 1], &[0, 5], &[5, 0]]));
        assert_eq!(j.evaluate_zero(0), j);
        assert_eq!(ideal(2, &[&[1, 1]]).evaluate_zero(1), MonomialIdeal::zero(1));
        for i in 0..=4 {
            for k in 0..=(4 - i) {
                assert_eq!(j.evaluate_zero(i).evaluate_zero(k), j.evaluate_zero(i + k));
            }
        }
    }

    #[test]
    fn one_evaluation() {
        let j1 = curve_initial().evaluate_zero(1);
        assert_eq!(j1.gens().len(), 5);
        assert_eq!(j1.evaluate_one(), ideal(3, &[&[1, 1, 0], &[0, 5, 0], &[3, 0, 0]]));
        let free = ideal(3, &[&[1, 1, 0], &[2, 0, 0]]);
        assert_eq!(free.evaluate_one(), free);
        assert_eq!(MonomialIdeal::zero(2).evaluate_one(), MonomialIdeal::zero(2));
        assert!(MonomialIdeal::unit(2).evaluate_one().is_unit());
    }

    #[test]
    fn evaluation_one_contains_original() {
        let j1 = curve_initial().evaluate_zero(1);
        let jt = j1.evaluate_one();
        for m in MonomialIdeal::zero(3).standard_monomials(0, 9) {
            if j1.contains(&m) {
                assert!(jt.contains(&m));
            }
        }
    }

    #[test]
    fn graded_counts() {
        let j2 = ideal(2, &[&[1, 1], &[0, 5], &[5, 0]]);
        assert_eq!(j2.graded_dim_quotient(4), 2);
        assert_eq!(j2.graded_dim_quotient(5), 0);
        assert_eq!(MonomialIdeal::zero(2).graded_dim_quotient(3), 4);
        assert_eq!(MonomialIdeal::unit(2).graded_dim_quotient(3), 0);
        assert_eq!(MonomialIdeal::unit(2).graded_dim_quotient(0), 0);
        assert_eq!(j2.graded_dims_up_to(6), vec![1, 2, 2, 2, 2, 0, 0]);
    }

    #[test]
    fn zero_ideal_counts_are_binomials() {
        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for s in 1..=5usize {
            let counts = MonomialIdeal::zero(s).graded_dims_up_to(8);
            for (r, c) in counts.iter().enumerate() {
                assert_eq!(*c, binom((r + s - 1) as u64, (s - 1) as u64), "s={s} r={r}");
                assert_eq!(*c, MonomialIdeal::zero(s).graded_dim_quotient(r as u32));
            }
        }
    }

    #[test]
    fn counting_matches_brute_force() {
        let j = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2], &[0, 0, 4]]);
        let box_all = MonomialIdeal::zero(3).standard_monomials(0, 9);
        let counts = j.graded_dims_up_to(9);
        for r in 0..=9 {
            let brute = box_all.iter().filter(|m| m.degree() == r && !j.contains(m)).count();
            assert_eq!(counts[r as usize], brute as u64);
            assert_eq!(j.graded_dim_quotient(r), brute as u64);
        }
    }

    #[test]
    fn dimension() {
        assert_eq!(curve_initial().krull_dim(), Some(2));
        assert_eq!(MonomialIdeal::zero(5).krull_dim(), Some(5));
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).krull_dim(), Some(0));
        assert_eq!(MonomialIdeal::unit(3).krull_dim(), None);
        let j = curve_initial();
        for i in 0..=4 {
            let di = j.evaluate_zero(i).krull_dim().unwrap() as i64;
            assert!(di >= 2 - i as i64);
        }
    }

    #[test]
    fn gosper_enumeration() {
        let masks: Vec<u64> = covers_of_size(4, 2).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(covers_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
    }

    #[test]
    fn lcm_of_levels() {
        let j = curve_initial();
        assert_eq!(j.lcm_gens(1), Some(ev(&[5, 5, 2])));
        assert_eq!(j.lcm_gens(0), Some(ev(&[5, 5, 2, 0])));
        assert_eq!(ideal(1, &[&[3]]).lcm_gens(0), Some(ev(&[3])));
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).lcm_gens(0), Some(ev(&[2, 3])));
        assert_eq!(ideal(2, &[&[1, 1]]).lcm_gens(1), None);
    }

    #[test]
    fn colon_and_saturation() {
        let j = ideal(2, &[&[1, 1]]);
        assert_eq!(j.colon_by_var(1), ideal(2, &[&[1, 0]]));
        assert_eq!(j.saturate_by_var(1), ideal(2, &[&[1, 0]]));
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).colon_by_var(0), ideal(2, &[&[1, 0], &[0, 3]]));
        let j1 = curve_initial().evaluate_zero(1);
        assert_eq!(j1.saturate_by_var(2), j1.evaluate_one());
    }

    #[test]
    fn saturation_is_iterated_colon() {
        let j = curve_initial();
        for var in 0..4 {
            let sat = j.saturate_by_var(var);
            assert_eq!(sat.saturate_by_var(var), sat);
            let mut it = j.clone();
            for _ in 0..j.max_exponents()[var] {
                it = it.colon_by_var(var);
            }
            assert_eq!(it, sat);
        }
    }

    #[test]
    fn artinian() {
        assert!(ideal(2, &[&[1, 1], &[0, 5], &[5, 0]]).is_artinian());
        assert!(!ideal(2, &[&[1, 1], &[5, 0]]).is_artinian());
        assert!(MonomialIdeal::unit(2).is_artinian());
        assert!(!MonomialIdeal::zero(1).is_artinian());
    }
}
