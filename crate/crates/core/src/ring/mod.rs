//! Polynomial rings `F_p[x_1, ..., x_n]` under graded reverse lexicographic order.
//!
//! The order is fixed throughout the crate: `x_1 > x_2 > ... > x_n`, higher total
//! degree wins, and between monomials of equal degree the one whose exponent
//! difference `a - b` has a *negative* last nonzero entry is the larger.

mod parse;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::{Error, Result};

pub use parse::{parse_monomial, parse_polynomial};
pub use poly::Polynomial;

pub const DEFAULT_MODULUS: u32 = 32003;

/// Trial division; moduli are at most `u32::MAX`.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m.is_multiple_of(2) {
        return m == 2;
    }
    let mut f = 3u64;
    while f * f <= m {
        if m.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Coefficient ring data and variable names of `S = F_p[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    p: u32,
    names: Vec<String>,
}

impl Ring {
    pub fn new(p: u32, names: Vec<String>) -> Result<Arc<Self>> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime { modulus: p.into() });
        }
        if names.is_empty() {
            return Err(Error::usage("a ring needs at least one variable"));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::usage(format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::usage(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Arc::new(Ring { p, names }))
    }

    /// `F_p[x1, ..., xn]`.
    pub fn with_vars(p: u32, n: usize) -> Result<Arc<Self>> {
        Ring::new(p, (1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// The ring `S_i = F_p[x_1, ..., x_k]` of the first `k` variables.
    pub fn prefix(&self, k: usize) -> Arc<Ring> {
        assert!(k <= self.n(), "prefix of {k} variables in a ring of {}", self.n());
        Arc::new(Ring {
            p: self.p,
            names: self.names[..k].to_vec(),
        })
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Inverse by Fermat; `a` must be nonzero.
    pub(crate) fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        let p = u64::from(self.p);
        let (mut base, mut exp, mut acc) = (u64::from(a) % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduce a signed integer into `0..p`.
    pub fn reduce_int(&self, c: i64) -> u32 {
        c.rem_euclid(i64::from(self.p)) as u32
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A lattice point of `ℕ^s`: the exponent vector of the monomial `x^a`.
///
/// The derived `Ord` is plain lexicographic order on the entries and only
/// serves to keep containers canonical. Monomial comparisons go through
/// [`ExponentVector::revlex_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(s: usize) -> Self {
        ExponentVector(vec![0; s])
    }

    /// The unit vector `e_j` (0-based index).
    pub fn unit(s: usize, j: usize) -> Self {
        let mut v = vec![0; s];
        v[j] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Total degree `|a|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, assuming `other` divides `self`.
    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Delete the coordinate `j` (0-based).
    pub fn delete(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(j);
        ExponentVector(v)
    }

    /// Graded reverse lexicographic comparison. Lengths must agree.
    pub fn revlex_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                // a - b negative in the last differing slot makes self larger
                return if a < b { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Checked revlex comparison.
pub fn revlex_compare(a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::usage(format!(
            "cannot compare exponent vectors of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.revlex_cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(v: [u32; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn curve_family_leading_terms_order() {
        // x_1^2 x_3^3 < x_2^5
        assert_eq!(revlex_compare(&ev([2, 0, 3, 0]), &ev([0, 5, 0, 0])).unwrap(), Ordering::Less);
        // x_1^3 x_3^2 > x_2^4 x_4
        assert_eq!(ev([3, 0, 2, 0]).revlex_cmp(&ev([0, 4, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn equal_degree_tie_break() {
        assert_eq!(ev([1, 0, 0, 1]).revlex_cmp(&ev([0, 1, 1, 0])), Ordering::Less);
        assert_eq!(ev([1, 2, 0]).revlex_cmp(&ev([1, 2, 0])), Ordering::Equal);
        assert_eq!(ev([1, 0]).revlex_cmp(&ev([0, 1])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_usage_error() {
        assert!(matches!(revlex_compare(&ev([1, 0]), &ev([1, 0, 0])), Err(Error::Usage(_))));
    }

    fn all_vectors(s: usize, max: u32) -> Vec<ExponentVector> {
        let mut out = vec![vec![]];
        for _ in 0..s {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=max).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(ExponentVector).collect()
    }

    #[test]
    fn revlex_is_a_monomial_order_on_small_box() {
        for s in 1..=4 {
            let mut vs = all_vectors(s, 3);
            vs.sort_by(|a, b| a.revlex_cmp(b));
            // every pair in sorted position compares strictly: the relation is the
            // linear order of this list, hence total, antisymmetric and transitive
            for i in 0..vs.len() {
                for j in 0..vs.len() {
                    assert_eq!(vs[i].revlex_cmp(&vs[j]), i.cmp(&j), "{} vs {}", vs[i], vs[j]);
                    if vs[i].degree() > vs[j].degree() {
                        assert_eq!(vs[i].revlex_cmp(&vs[j]), Ordering::Greater);
                    }
                }
            }
            let shifts = all_vectors(s, 1);
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    for c in &shifts {
                        assert_eq!(vs[i].add(c).revlex_cmp(&vs[j].add(c)), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn ring_validation() {
        assert!(matches!(Ring::with_vars(4, 2), Err(Error::NotPrime { modulus: 4 })));
        assert!(Ring::new(7, vec!["a".into(), "a".into()]).is_err());
        assert!(Ring::new(7, vec!["1x".into()]).is_err());
        let r = Ring::with_vars(32003, 3).unwrap();
        assert_eq!(r.names(), ["x1", "x2", "x3"]);
        assert_eq!(r.prefix(2).n(), 2);
    }

    #[test]
    fn field_inverse() {
        let r = Ring::with_vars(32003, 1).unwrap();
        for a in [1u32, 2, 3, 17, 32002] {
            assert_eq!(r.mul(a, r.inv(a)), 1);
        }
        assert_eq!(r.reduce_int(-1), 32002);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&m| is_prime(m)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
    }
}
