#![allow(dead_code)]

use std::sync::Arc;

use castelnuovo::ring::parse_polynomial;
use castelnuovo::{ExponentVector, MonomialIdeal, Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ring(n: usize) -> Arc<Ring> {
    Ring::with_vars(32003, n).unwrap()
}

pub fn polys(n: usize, texts: &[&str]) -> Vec<Polynomial> {
    let r = ring(n);
    texts.iter().map(|t| parse_polynomial(&r, t).unwrap()).collect()
}

/// Binomial generators of the monomial curve `(t^α s^β : t^β s^α : s^{α+β} : t^{α+β})`.
pub fn curve_generators(alpha: u32, beta: u32) -> Vec<Polynomial> {
    let mut texts = vec!["x1*x2 - x3*x4".to_string()];
    for r in 0..=(alpha - beta) {
        texts.push(format!(
            "x1^{}*x3^{} - x2^{}*x4^{}",
            beta + r,
            alpha - beta - r,
            alpha - r,
            r
        ));
    }
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    polys(4, &refs)
}

pub fn twisted_cubic() -> Vec<Polynomial> {
    polys(4, &["x1^2 - x2*x3", "x2^2 - x1*x4", "x1*x2 - x3*x4"])
}

pub fn monomial_generators(j: &MonomialIdeal) -> Vec<Polynomial> {
    let r = ring(j.s());
    j.gens().iter().map(|g| Polynomial::monomial(&r, g.clone(), 1)).collect()
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// A few dense homogeneous forms of one degree with random coefficients.
pub fn random_homogeneous(seed: u64, n: usize, count: usize, degree: u32) -> Vec<Polynomial> {
    let r = ring(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monomials = MonomialIdeal::zero(n).standard_monomials(degree, degree);
    (0..count)
        .map(|_| {
            let mut terms: Vec<(ExponentVector, i64)> = Vec::new();
            for m in &monomials {
                if rng.random_bool(0.5) {
                    terms.push((m.clone(), rng.random_range(1..32003)));
                }
            }
            Polynomial::from_terms(&r, terms)
        })
        .filter(|f| !f.is_zero())
        .collect()
}
