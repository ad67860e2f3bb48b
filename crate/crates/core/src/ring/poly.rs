use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{ExponentVector, Ring};
use crate::{Error, Result};

/// A polynomial over `F_p` with terms kept in strictly decreasing revlex order.
///
/// Stored coefficients lie in `1..p`; the zero polynomial has no terms. Two
/// polynomials over equal rings are equal iff their term lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(ExponentVector, u32)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn monomial(ring: &Arc<Ring>, exp: ExponentVector, coeff: u32) -> Self {
        assert_eq!(exp.len(), ring.n());
        let c = coeff % ring.modulus();
        let terms = if c == 0 { Vec::new() } else { vec![(exp, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable `x_{j+1}` (0-based index `j`).
    pub fn variable(ring: &Arc<Ring>, j: usize) -> Self {
        Polynomial::monomial(ring, ExponentVector::unit(ring.n(), j), 1)
    }

    /// Build from arbitrary terms: duplicates are combined, zeros dropped.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, i64)>,
    {
        let mut acc: HashMap<ExponentVector, u32> = HashMap::new();
        for (exp, c) in terms {
            assert_eq!(exp.len(), ring.n(), "exponent length does not match the ring");
            let c = ring.reduce_int(c);
            let slot = acc.entry(exp).or_insert(0);
            *slot = ring.add(*slot, c);
        }
        Polynomial::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<ExponentVector, u32>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| b.0.revlex_cmp(&a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(ExponentVector, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.revlex_cmp(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(ExponentVector, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The revlex-greatest term.
    pub fn leading_term(&self) -> Result<(&ExponentVector, u32)> {
        self.terms.first().map(|(e, c)| (e, *c)).ok_or(Error::ZeroPolynomial)
    }

    pub(crate) fn lead_exp(&self) -> &ExponentVector {
        &self.terms[0].0
    }

    /// Degrees of the lowest and highest term; `None` for zero.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.iter().map(|(e, _)| e.degree());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_range().is_none_or(|(lo, hi)| lo == hi)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::usage("polynomials live in different rings"));
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, self.ring.neg(1)))
    }

    pub fn neg(&self) -> Self {
        self.scale(self.ring.neg(1))
    }

    /// `c · self` with `c` taken mod `p`.
    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.ring.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), self.ring.mul(*a, c)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn times(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<ExponentVector, u32> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = acc.entry(ea.add(eb)).or_insert(0);
                *slot = self.ring.add(*slot, self.ring.mul(*ca, *cb));
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(self.ring.inv(*c)),
        }
    }

    /// `self + c · x^shift · other`, merging the sorted term lists.
    pub(crate) fn add_scaled_shifted(&self, c: u32, shift: &ExponentVector, other: &Self) -> Self {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(e, k)| (e.add(shift), ring.mul(*k, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ea, _)), Some((eb, _))) => match ea.revlex_cmp(eb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (e, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ring.add(*ca, cb);
                        if s != 0 {
                            out.push((e.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial::from_sorted(ring, out)
    }

    fn combine(&self, other: &Self, c: u32) -> Self {
        self.add_scaled_shifted(c, &ExponentVector::zero(self.ring.n()), other)
    }

    /// Set the trailing variables `x_{k+1}, ..., x_n` to zero, landing in `F_p[x_1, ..., x_k]`.
    pub fn evaluate_trailing_zero(&self, k: usize) -> Self {
        let ring = self.ring.prefix(k);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.entries()[k..].iter().all(|x| *x == 0))
            .map(|(e, c)| (ExponentVector::new(e.entries()[..k].to_vec()), *c))
            .collect();
        // truncation preserves revlex order among survivors
        Polynomial::from_sorted(&ring, terms)
    }

    /// Move to an equal ring handle (same modulus and names), e.g. after parsing.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Self> {
        if **ring != *self.ring {
            return Err(Error::usage("target ring differs"));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }
}

impl fmt::Display for Polynomial {
    /// Coefficients above `p/2` print as negatives, so the output reparses to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let p = self.ring.modulus();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if *c > p / 2 { (true, p - c) } else { (false, *c) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if mag != 1 || e.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (name, x) in self.ring.names().iter().zip(e.entries()) {
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
