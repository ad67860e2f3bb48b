//! Pure powers placed on the trailing variables: the coordinate sequence is not
//! filter-regular, so every level with a pure power of `x_{n-i}` needs a change of
//! coordinates, and the result must still be `Σ (a_j − 1)`.

mod common;

use castelnuovo::{compute_report, MonomialIdeal, ReportOptions};
use common::*;

fn tail_powers(n: usize, powers: &[u32]) -> Vec<castelnuovo::Polynomial> {
    let offset = n - powers.len();
    let e = powers.iter().enumerate().map(|(j, a)| {
        let mut v = vec![0u32; n];
        v[offset + j] = *a;
        ev(&v)
    });
    monomial_generators(&MonomialIdeal::new(n, e))
}

const CHAIN: ReportOptions = ReportOptions {
    seed: 0,
    max_retries: 10,
    chain_criterion: true,
};

#[test]
fn trailing_pure_powers() {
    let mut retried = 0;
    for n in 2..=5usize {
        for k in 1..n.min(4) {
            for code in 0..3u32.pow(k as u32) {
                let powers: Vec<u32> = (0..k).map(|j| 1 + code / 3u32.pow(j as u32) % 3).collect();
                let rep = compute_report(&tail_powers(n, &powers), CHAIN).unwrap();
                let expected: u32 = powers.iter().map(|a| a - 1).sum();
                assert_eq!(rep.reg, expected, "{powers:?} on the last {k} of {n} variables");
                assert!(rep.bound.iter().zip(&rep.reg_t).all(|(b, r)| r.as_i64().is_none_or(|r| r <= *b)));
                assert!(rep.retries.iter().all(|r| r.accepted), "{powers:?}: rejected change");
                retried += usize::from(!rep.retries.is_empty());
            }
        }
    }
    assert!(retried > 0);
}

#[test]
fn four_quartics_after_change() {
    let rep = compute_report(&tail_powers(5, &[4, 4, 4, 4]), CHAIN).unwrap();
    assert_eq!(rep.reg, 12);
    assert_eq!(rep.retries.len(), 1);
}

#[test]
fn chain_criterion_does_not_change_results() {
    for powers in [vec![2, 3], vec![3, 2, 2], vec![1, 4]] {
        let gens = tail_powers(4, &powers);
        let plain = compute_report(&gens, ReportOptions::default()).unwrap();
        let chain = compute_report(&gens, CHAIN).unwrap();
        assert_eq!(plain.c, chain.c);
        assert_eq!(plain.levels, chain.levels);
        assert_eq!(plain.retries, chain.retries);
    }
}
