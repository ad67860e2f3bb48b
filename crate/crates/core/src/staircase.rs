//! Staircase combinatorics of the evaluated initial ideals.
//!
//! For a level `J_i ⊂ k[x_1..x_s]` we work with its generator exponents `E_i`,
//! the coordinate projections `p_j`, and the corner set `F_i` of the staircase
//! left after deleting the shadow of `E_i`. The corners are exactly the socle
//! monomials: `x^a ∉ J_i` while `x_j x^a ∈ J_i` for every `j`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::monideal::MonomialIdeal;
use crate::ring::ExponentVector;
use crate::{Degree, Error, Result};

/// A finite set of lattice points in `ℕ^s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    s: usize,
    elements: BTreeSet<ExponentVector>,
}

impl ExponentSet {
    pub fn new<I: IntoIterator<Item = ExponentVector>>(s: usize, elements: I) -> Self {
        let elements: BTreeSet<_> = elements.into_iter().collect();
        assert!(elements.iter().all(|e| e.len() == s));
        ExponentSet { s, elements }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.elements.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elements.iter()
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.elements.iter().map(|e| e.entries().to_vec()).collect()
    }
}

/// The corner set `F_i`, serialized as a sorted list of integer lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CornerSet {
    #[serde(skip)]
    s: usize,
    elements: BTreeSet<ExponentVector>,
}

impl CornerSet {
    pub fn new<I: IntoIterator<Item = ExponentVector>>(s: usize, elements: I) -> Self {
        CornerSet {
            s,
            elements: elements.into_iter().collect(),
        }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elements.iter()
    }

    /// `max |a|` over the corners, `−∞` when there are none.
    pub fn max_degree(&self) -> Degree {
        self.elements
            .iter()
            .map(|a| Degree::Finite(a.degree()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }
}

/// `E_i`: the minimal generators of `J_i` as lattice points.
pub fn exponent_set(level: &MonomialIdeal) -> ExponentSet {
    ExponentSet::new(level.s(), level.gens().iter().cloned())
}

/// `p_j`: delete coordinate `coord` (0-based). The image is a point set, not minimalized.
pub fn project(set: &ExponentSet, coord: usize) -> ExponentSet {
    assert!(coord < set.s, "coordinate {coord} out of range for ℕ^{}", set.s);
    ExponentSet::new(set.s - 1, set.elements.iter().map(|e| e.delete(coord)))
}

/// Finiteness test for `c_i`: every `a ∈ p_s(E_i) \ E_{i+1}` must have, for each
/// remaining coordinate `j`, some `b_j ∈ E_{i+1}` with `p_j(a) ≥ p_j(b_j)`.
pub fn is_c_finite(level: &ExponentSet, next: &ExponentSet) -> Result<bool> {
    if level.s == 0 || next.s + 1 != level.s {
        return Err(Error::usage(format!(
            "exponent sets in ℕ^{} and ℕ^{} are not consecutive levels",
            level.s, next.s
        )));
    }
    let projected = project(level, level.s - 1);
    let ok = projected.iter().filter(|a| !next.contains(a)).all(|a| {
        (0..next.s).all(|j| {
            let pa = a.delete(j);
            next.iter().any(|b| b.delete(j).divides(&pa))
        })
    });
    Ok(ok)
}

/// The corners of the staircase of `J`, by socle enumeration over the box
/// `∏_j [0, M_j − 1]`, `M_j` the largest `j`-exponent among the generators.
/// A socle element `a` needs a generator with `j`-th entry `a_j + 1`, hence the box.
pub fn corners(ideal: &MonomialIdeal) -> CornerSet {
    let s = ideal.s();
    let bounds = ideal.max_exponents();
    let mut found = Vec::new();
    if ideal.is_zero() || bounds.contains(&0) {
        // some variable never occurs: no monomial has all its multiples inside
        return CornerSet::new(s, found);
    }
    let mut a = vec![0u32; s];
    'outer: loop {
        let v = ExponentVector::new(a.clone());
        if is_socle(ideal, &v) {
            found.push(v);
        }
        for j in 0..s {
            a[j] += 1;
            if a[j] < bounds[j] {
                continue 'outer;
            }
            a[j] = 0;
        }
        break;
    }
    CornerSet::new(s, found)
}

/// `x^a ∉ J` and `x_j x^a ∈ J` for all `j`.
pub fn is_socle(ideal: &MonomialIdeal, a: &ExponentVector) -> bool {
    if ideal.contains(a) {
        return false;
    }
    let mut e = a.entries().to_vec();
    (0..e.len()).all(|j| {
        e[j] += 1;
        let inside = ideal.contains(&ExponentVector::new(e.clone()));
        e[j] -= 1;
        inside
    })
}

/// Evidence that `J̃_i / J_i` has finite length, tied to the level it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessCertificate {
    level: MonomialIdeal,
}

/// Run the finiteness test on `J_i` against `J_{i+1}`. `None` when `c_i = ∞`.
pub fn certify_finite(level: &MonomialIdeal) -> Result<Option<FinitenessCertificate>> {
    if level.s() == 0 {
        return Ok(Some(FinitenessCertificate { level: level.clone() }));
    }
    let here = exponent_set(level);
    let next = exponent_set(&level.evaluate_zero(1));
    Ok(is_c_finite(&here, &next)?.then(|| FinitenessCertificate { level: level.clone() }))
}

/// `c_i(I) = max_{a ∈ F_i} |a|`, or `−∞` when `F_i` is empty.
pub fn c_value(level: &MonomialIdeal, certificate: &FinitenessCertificate) -> Result<Degree> {
    if certificate.level != *level {
        return Err(Error::usage("finiteness certificate was issued for a different level"));
    }
    Ok(corners(level).max_degree())
}

/// `r(I) = max_{a ∈ F_d} |a|` for an Artinian `J_d`.
pub fn r_value(last: &MonomialIdeal) -> Result<u32> {
    if !last.is_artinian() {
        return Err(Error::InfiniteReduction);
    }
    if last.is_unit() {
        return Err(Error::UnitIdeal);
    }
    match corners(last).max_degree() {
        Degree::Finite(r) => Ok(r),
        // an Artinian proper ideal always has a socle
        Degree::NegInfinity => Err(Error::Inconsistent("Artinian ideal without corners".into())),
    }
}
