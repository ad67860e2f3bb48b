//! Regularity reports.
//!
//! [`compute_report`] walks the levels `i = 0..=d`. Each level `J_i` must pass
//! the finiteness test; if it does not, the ideal `I_i` (trailing variables set
//! to zero) is pushed through a random lower-triangular change of `x_1..x_{n-i}`
//! and only its initial ideal is recomputed. Earlier levels are unaffected by
//! such a change, so their values are kept.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::groebner::{buchberger_with, initial_ideal, BuchbergerOptions, LinearChange};
use crate::monideal::MonomialIdeal;
use crate::ring::Polynomial;
use crate::staircase::{c_value, certify_finite, corners, exponent_set, r_value, CornerSet};
use crate::{Degree, Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub seed: u64,
    /// Coordinate changes attempted per failing level.
    pub max_retries: u32,
    pub chain_criterion: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 0,
            max_retries: 10,
            chain_criterion: false,
        }
    }
}

/// One attempted coordinate change.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetryRecord {
    pub level: usize,
    pub attempt: u32,
    /// Seed handed to the matrix sampler, derived from `(seed, level, attempt)`.
    pub seed: u64,
    pub digest: String,
    /// Whether the level passed the finiteness test afterwards.
    pub accepted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub n: usize,
    pub p: u32,
    pub d: usize,
    /// `c_0, ..., c_d`.
    pub c: Vec<Degree>,
    pub r: u32,
    pub reg: u32,
    /// `reg_t(S/I)` for `t = 0..=d`.
    pub reg_t: Vec<Degree>,
    /// `max{deg g_i − n + i : i ≤ t}` for `t = 0..=d`.
    pub bound: Vec<i64>,
    /// Smallest `t` with `c_t = max c_i`.
    pub attained_t: usize,
    pub retries: Vec<RetryRecord>,
    pub corners: BTreeMap<usize, CornerSet>,
    #[serde(skip)]
    pub initial: MonomialIdeal,
    /// The monomial ideal `J_i` actually used at each level (after any coordinate change).
    #[serde(skip)]
    pub levels: Vec<MonomialIdeal>,
}

impl RegularityReport {
    /// `reg_t(S/I)`; beyond `d` the value no longer changes.
    pub fn partial(&self, t: usize) -> Degree {
        self.reg_t[t.min(self.d)]
    }

    /// The partial regularity `ℓ-reg(S/I) = reg_{n−ℓ}(S/I)` for `1 ≤ ℓ ≤ n`.
    pub fn ell_reg(&self, ell: usize) -> Option<Degree> {
        (1..=self.n).contains(&ell).then(|| self.partial(self.n - ell))
    }

    /// The coordinate sequence `x_n, x_{n-1}, ...` is filter-regular up to `x_{n-d}`;
    /// every level was certified finite, so this always holds for a finished report.
    pub fn filter_regular(&self) -> bool {
        self.c.len() == self.d + 1
    }
}

/// Level `i`: `x_{n-i}` is a non-zerodivisor on `S/(I, x_n, ..., x_{n-i+1})` iff `c_i = −∞`.
pub fn zerodivisor_flags(report: &RegularityReport) -> Vec<bool> {
    report.c[..report.d].iter().map(|c| c.is_neg_infinity()).collect()
}

fn derive_seed(seed: u64, level: usize, attempt: u32) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update((level as u64).to_le_bytes());
    hasher.update(attempt.to_le_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

/// `deg g_i − n + i`, computed inside the level ring of `s = n − i` variables.
fn level_bound(level: &MonomialIdeal) -> Option<i64> {
    level
        .lcm_gens(0)
        .map(|g| i64::from(g.degree()) - level.s() as i64)
}

/// `max{deg g_i − n + i : i = 0..=t}` from the generators of `In(I)`.
pub fn reg_bound(initial: &MonomialIdeal, t: usize) -> Option<i64> {
    (0..=t.min(initial.s())).filter_map(|i| level_bound(&initial.evaluate_zero(i))).max()
}

fn ring_of(gens: &[Polynomial]) -> Result<(usize, u32)> {
    let first = gens.first().ok_or_else(|| Error::usage("no generators"))?;
    Ok((first.ring().n(), first.ring().modulus()))
}

/// Run the full pipeline on homogeneous generators.
pub fn compute_report(gens: &[Polynomial], opts: ReportOptions) -> Result<RegularityReport> {
    let (n, p) = ring_of(gens)?;
    let bopts = BuchbergerOptions {
        chain_criterion: opts.chain_criterion,
    };
    let gb = buchberger_with(gens, bopts)?;
    let initial = initial_ideal(&gb);
    if initial.is_zero() {
        return Err(Error::usage("the zero ideal is not supported"));
    }
    let d = initial.krull_dim().ok_or(Error::UnitIdeal)?;

    // current coordinates: generators of I_offset in n − offset variables
    let mut offset = 0usize;
    let mut work_gens: Vec<Polynomial> = gb.into_elements();
    let mut work_ideal = initial.clone();

    let mut retries = Vec::new();
    let mut levels = Vec::with_capacity(d + 1);
    let mut c = Vec::with_capacity(d + 1);
    let mut corner_sets = BTreeMap::new();

    for i in 0..=d {
        let mut level = work_ideal.evaluate_zero(i - offset);
        let mut cert = certify_finite(&level)?;
        if cert.is_none() {
            let k = n - i;
            let base: Vec<Polynomial> = work_gens
                .iter()
                .map(|g| g.evaluate_trailing_zero(k))
                .filter(|g| !g.is_zero())
                .collect();
            let mut last = level.clone();
            for attempt in 1..=opts.max_retries {
                let seed = derive_seed(opts.seed, i, attempt);
                let change = LinearChange::sample(k, p, seed);
                let gb_i = buchberger_with(&change.apply(&base)?, bopts)?;
                let candidate = initial_ideal(&gb_i);
                let candidate_cert = certify_finite(&candidate)?;
                retries.push(RetryRecord {
                    level: i,
                    attempt,
                    seed,
                    digest: change.digest(),
                    accepted: candidate_cert.is_some(),
                });
                if candidate_cert.is_some() {
                    offset = i;
                    work_gens = gb_i.into_elements();
                    work_ideal = candidate.clone();
                    level = candidate;
                    cert = candidate_cert;
                    break;
                }
                last = candidate;
            }
            if cert.is_none() {
                return Err(Error::RetriesExhausted {
                    level: i,
                    attempts: opts.max_retries,
                    e_level: exponent_set(&last).to_vecs(),
                    e_next: exponent_set(&last.evaluate_zero(1)).to_vecs(),
                });
            }
        }
        let cert = cert.expect("certified above");
        c.push(c_value(&level, &cert)?);
        corner_sets.insert(i, corners(&level));
        levels.push(level);
    }

    let r = r_value(&levels[d])?;
    let reg = c[..d]
        .iter()
        .filter_map(|v| v.finite())
        .chain(std::iter::once(r))
        .max()
        .expect("r is always present");

    let reg_t: Vec<Degree> = c
        .iter()
        .scan(Degree::NegInfinity, |acc, v| {
            *acc = (*acc).max(*v);
            Some(*acc)
        })
        .collect();
    let bound: Vec<i64> = levels
        .iter()
        .scan(None::<i64>, |acc, level| {
            *acc = match (*acc, level_bound(level)) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            };
            Some(acc.expect("level 0 of a nonzero ideal has generators"))
        })
        .collect();
    let top = *c.iter().max().expect("d + 1 levels");
    let attained_t = c.iter().position(|v| *v == top).expect("max is attained");

    if reg_t[d] != Degree::Finite(reg) {
        return Err(Error::Inconsistent(format!(
            "reg_d = {} differs from reg = {reg}",
            reg_t[d]
        )));
    }
    for (t, (v, b)) in reg_t.iter().zip(&bound).enumerate() {
        if v.as_i64().is_some_and(|v| v > *b) {
            return Err(Error::Inconsistent(format!("reg_{t} = {v} exceeds the lcm bound {b}")));
        }
    }

    Ok(RegularityReport {
        n,
        p,
        d,
        c,
        r,
        reg,
        reg_t,
        bound,
        attained_t,
        retries,
        corners: corner_sets,
        initial,
        levels,
    })
}

/// The shift `b_{n-1}` of the last module in a minimal resolution of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LastShift {
    Degree(u32),
    /// Arithmetically Cohen-Macaulay: the resolution stops before position `n − 1`.
    CohenMacaulay,
}

impl Serialize for LastShift {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LastShift::Degree(b) => serializer.serialize_u32(*b),
            LastShift::CohenMacaulay => serializer.serialize_str("Cohen-Macaulay, F_{n-1}=0"),
        }
    }
}

/// Projective curve quantities, valid when `k[x_{n-1}, x_n]` is a Noether normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub n: usize,
    pub p: u32,
    pub noether_ok: bool,
    pub c1: Option<Degree>,
    pub r: Option<u32>,
    pub reg: Option<u32>,
    #[serde(rename = "H_E")]
    pub h_e: Option<u32>,
    #[serde(rename = "H_Re")]
    pub h_re: Option<u32>,
    pub last_shift: Option<LastShift>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CurveReport {
    fn withheld(n: usize, p: u32, noether_ok: bool, note: String) -> Self {
        CurveReport {
            n,
            p,
            noether_ok,
            c1: None,
            r: None,
            reg: None,
            h_e: None,
            h_re: None,
            last_shift: None,
            note: Some(note),
        }
    }
}

/// `H(E)`: the least degree in which every monomial of `k[x_1..x_{n-2}]` lies in `J_2`.
pub fn h_e_by_counting(last: &MonomialIdeal) -> Option<u32> {
    let top = last.lcm_gens(0)?.degree();
    let counts = last.graded_dims_up_to(top);
    counts.iter().position(|c| *c == 0).map(|t| t as u32)
}

/// `H(ℜ)` straight from Hilbert functions: the least `r` from which
/// `s ↦ H_{S/In}(s) − H_{S/Ĩ}(s)` is constant, `Ĩ` being `In` at `x_{n-1} = x_n = 1`.
///
/// Scans up to twice the degree of the lcm of the generators; requires that no
/// generator of `initial` involves `x_n`.
pub fn h_re_by_counting(initial: &MonomialIdeal) -> Option<u32> {
    let s = initial.s();
    if s < 2 {
        return None;
    }
    let tilde = initial.saturate_by_var(s - 1).saturate_by_var(s - 2);
    let ceiling = 2 * initial.lcm_gens(0)?.degree() + 2;
    let a = initial.graded_dims_up_to(ceiling);
    let b = tilde.graded_dims_up_to(ceiling);
    let diff: Vec<u64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    let tail = *diff.last()?;
    let start = diff.iter().rposition(|v| *v != tail).map_or(0, |k| k + 1);
    Some(start as u32)
}

/// Curve mode: `reg = max{c_1, r}` and the derived shift and Hilbert-type data.
pub fn curve_report(gens: &[Polynomial]) -> Result<CurveReport> {
    let (n, p) = ring_of(gens)?;
    let gb = buchberger_with(gens, BuchbergerOptions::default())?;
    let initial = initial_ideal(&gb);
    if initial.is_zero() {
        return Err(Error::usage("the zero ideal is not supported"));
    }
    let d = initial.krull_dim().ok_or(Error::UnitIdeal)?;
    if n < 3 || d != 2 || !initial.evaluate_zero(2).is_artinian() {
        return Ok(CurveReport::withheld(
            n,
            p,
            false,
            format!(
                "k[x_{{n-1}}, x_n] is not a Noether normalization (dim = {d}); \
                 apply a linear change of coordinates"
            ),
        ));
    }

    let level0 = initial.clone();
    let c0 = match certify_finite(&level0)? {
        Some(cert) => c_value(&level0, &cert)?,
        None => {
            return Ok(CurveReport::withheld(n, p, true, "c_0 is infinite; the ideal is not saturated".into()))
        }
    };
    if !c0.is_neg_infinity() {
        return Ok(CurveReport::withheld(
            n,
            p,
            true,
            format!("c_0 = {c0}: x_n is a zerodivisor, the ideal is not saturated"),
        ));
    }
    let level1 = initial.evaluate_zero(1);
    let Some(cert1) = certify_finite(&level1)? else {
        return Ok(CurveReport::withheld(n, p, true, "c_1 is infinite".into()));
    };
    let c1 = c_value(&level1, &cert1)?;
    let last = initial.evaluate_zero(2);
    let r = r_value(&last)?;
    let reg = c1.finite().map_or(r, |c| c.max(r));

    let h_e = if c1.is_neg_infinity() {
        let counted = h_e_by_counting(&last);
        if counted != Some(r + 1) {
            return Err(Error::Inconsistent(format!("H(E) = {counted:?} but r + 1 = {}", r + 1)));
        }
        Some(r + 1)
    } else {
        None
    };
    let h_re = c1.finite().unwrap_or(0);
    let counted = h_re_by_counting(&initial);
    if counted != Some(h_re) {
        return Err(Error::Inconsistent(format!(
            "H(Re) by counting = {counted:?}, from c_1 = {h_re}"
        )));
    }
    let last_shift = match c1 {
        Degree::Finite(c) => LastShift::Degree(c + n as u32 - 1),
        Degree::NegInfinity => LastShift::CohenMacaulay,
    };

    Ok(CurveReport {
        n,
        p,
        noether_ok: true,
        c1: Some(c1),
        r: Some(r),
        reg: Some(reg),
        h_e,
        h_re: Some(h_re),
        last_shift: Some(last_shift),
        note: None,
    })
}
