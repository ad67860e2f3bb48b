//! Definitional computations used to check the staircase formulas.
//!
//! Everything here works from Hilbert-function counts of monomial ideals and
//! never looks at corners: `a_i` compares `J_i` with its saturation (or colon)
//! by `x_{n-i}` degree by degree, `r` is the top nonvanishing degree of
//! `S/J_d`. Test families with independently known regularity live here too.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::monideal::MonomialIdeal;
use crate::regularity::{compute_report, ReportOptions};
use crate::ring::{ExponentVector, Polynomial};
use crate::staircase::CornerSet;
use crate::{Degree, Error, Result};

/// An `a_i` computed by counting: `−∞`, a degree, or still nonzero at the search ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleValue {
    NegInfinity,
    Finite(u32),
    Infinite,
}

impl OracleValue {
    pub fn agrees_with(self, c: Degree) -> bool {
        match (self, c) {
            (OracleValue::NegInfinity, Degree::NegInfinity) => true,
            (OracleValue::Finite(a), Degree::Finite(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleValue::NegInfinity => f.write_str("-infinity"),
            OracleValue::Finite(v) => write!(f, "{v}"),
            OracleValue::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for OracleValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OracleValue::Finite(v) => serializer.serialize_u32(*v),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

/// Per-degree differences `dim (S/J)_r − dim (S/J')_r` for `r = 0..=ceiling`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub ceiling: u32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub differences: Vec<u64>,
}

impl Trace {
    fn between(j: &MonomialIdeal, larger: &MonomialIdeal, ceiling: u32) -> Self {
        let a = j.graded_dims_up_to(ceiling);
        let b = larger.graded_dims_up_to(ceiling);
        Trace {
            ceiling,
            differences: a.iter().zip(&b).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn value(&self) -> OracleValue {
        if self.differences.last().is_some_and(|v| *v != 0) {
            return OracleValue::Infinite;
        }
        match self.differences.iter().rposition(|v| *v != 0) {
            Some(r) => OracleValue::Finite(r as u32),
            None => OracleValue::NegInfinity,
        }
    }
}

/// The generator-lcm degree of `J_i`, the smallest admissible search ceiling.
pub fn min_ceiling(j: &MonomialIdeal, i: usize) -> u32 {
    j.evaluate_zero(i).lcm_gens(0).map_or(0, |g| g.degree())
}

/// Default search ceiling at level `i`: twice the lcm degree, plus one.
pub fn default_ceiling(j: &MonomialIdeal, i: usize) -> u32 {
    2 * min_ceiling(j, i) + 1
}

fn level_and_var(j: &MonomialIdeal, i: usize, ceiling: u32) -> Result<(MonomialIdeal, usize)> {
    if i >= j.s() {
        return Err(Error::usage(format!("level {i} needs at least {} variables", i + 1)));
    }
    let needed = min_ceiling(j, i);
    if ceiling < needed {
        return Err(Error::usage(format!(
            "search ceiling {ceiling} is below the lcm degree {needed} at level {i}"
        )));
    }
    let level = j.evaluate_zero(i);
    let var = level.s() - 1;
    Ok((level, var))
}

/// Trace of `J_i : x_{n-i}^∞` against `J_i`.
pub fn a_def_trace(j: &MonomialIdeal, i: usize, ceiling: u32) -> Result<Trace> {
    let (level, var) = level_and_var(j, i, ceiling)?;
    Ok(Trace::between(&level, &level.saturate_by_var(var), ceiling))
}

/// `a_i` as the top degree where `J_i : x_{n-i}^∞` and `J_i` differ.
pub fn a_def(j: &MonomialIdeal, i: usize, ceiling: u32) -> Result<OracleValue> {
    Ok(a_def_trace(j, i, ceiling)?.value())
}

/// `a_i` from the single colon `J_i : x_{n-i}`.
pub fn a_def_colon(j: &MonomialIdeal, i: usize, ceiling: u32) -> Result<OracleValue> {
    let (level, var) = level_and_var(j, i, ceiling)?;
    Ok(Trace::between(&level, &level.colon_by_var(var), ceiling).value())
}

/// Top degree of `S/J_d`, searched up to `ceiling ≥ |lcm|`.
pub fn r_def(last: &MonomialIdeal, ceiling: u32) -> Result<u32> {
    let needed = last.lcm_gens(0).map_or(0, |g| g.degree());
    if ceiling < needed {
        return Err(Error::usage(format!("search ceiling {ceiling} is below the lcm degree {needed}")));
    }
    let dims = last.graded_dims_up_to(ceiling);
    if dims.last().is_some_and(|v| *v != 0) {
        return Err(Error::InfiniteReduction);
    }
    dims.iter()
        .rposition(|v| *v != 0)
        .map(|r| r as u32)
        .ok_or(Error::UnitIdeal)
}

/// The smallest ideal containing `monomials` closed under `x_j m ↦ x_h m` for `h < j`.
pub fn borel_closure(s: usize, monomials: &[ExponentVector]) -> MonomialIdeal {
    let mut seen: std::collections::BTreeSet<ExponentVector> = monomials.iter().cloned().collect();
    let mut stack: Vec<ExponentVector> = seen.iter().cloned().collect();
    while let Some(m) = stack.pop() {
        for j in 0..s {
            if m.entries()[j] == 0 {
                continue;
            }
            for h in 0..j {
                let mut e = m.entries().to_vec();
                e[j] -= 1;
                e[h] += 1;
                let next = ExponentVector::new(e);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    MonomialIdeal::new(s, seen)
}

/// Whether every generator satisfies the exchange property.
pub fn is_strongly_stable(j: &MonomialIdeal) -> bool {
    j.gens().iter().all(|g| {
        (0..j.s()).filter(|&k| g.entries()[k] > 0).all(|k| {
            (0..k).all(|h| {
                let mut e = g.entries().to_vec();
                e[k] -= 1;
                e[h] += 1;
                j.contains(&ExponentVector::new(e))
            })
        })
    })
}

/// A random strongly stable ideal in `n` variables generated in degrees `≤ dmax`.
pub fn gen_strongly_stable(seed: u64, n: usize, dmax: u32) -> MonomialIdeal {
    assert!(n >= 2 && dmax >= 1, "need n ≥ 2 and dmax ≥ 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.random_range(1..=3);
    let seeds: Vec<ExponentVector> = (0..count)
        .map(|_| {
            let degree = rng.random_range(1..=dmax);
            let mut e = vec![0u32; n];
            for _ in 0..degree {
                e[rng.random_range(0..n)] += 1;
            }
            ExponentVector::new(e)
        })
        .collect();
    let ideal = borel_closure(n, &seeds);
    debug_assert!(is_strongly_stable(&ideal));
    ideal
}

/// A random monomial ideal with at most `max_gens` generators and entries `≤ max_exp`.
pub fn gen_monomial_ideal(seed: u64, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count).map(|_| {
        let mut e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
        if e.iter().all(|v| *v == 0) {
            e[rng.random_range(0..n)] = 1;
        }
        ExponentVector::new(e)
    });
    MonomialIdeal::new(n, gens)
}

/// Corners from families `v_1..v_s` of minimal generators where `v_j` alone holds
/// the largest `j`-th coordinate: `a = max(v_1..v_s) − (1..1)` when `a` is outside `J`.
pub fn family_corners(j: &MonomialIdeal) -> CornerSet {
    let s = j.s();
    let mut found = Vec::new();
    if s > 0 {
        let mut chosen: Vec<&ExponentVector> = Vec::with_capacity(s);
        extend_family(j, &mut chosen, &mut found);
    }
    CornerSet::new(s, found)
}

fn extend_family<'a>(j: &'a MonomialIdeal, chosen: &mut Vec<&'a ExponentVector>, found: &mut Vec<ExponentVector>) {
    let s = j.s();
    let k = chosen.len();
    if k == s {
        let a: Vec<u32> = (0..s).map(|c| chosen[c].entries()[c] - 1).collect();
        let a = ExponentVector::new(a);
        if !j.contains(&a) {
            found.push(a);
        }
        return;
    }
    for v in j.gens() {
        // v takes coordinate k strictly above the others, and does not reach theirs
        let ok = chosen.iter().enumerate().all(|(c, w)| {
            v.entries()[k] > w.entries()[k] && w.entries()[c] > v.entries()[c]
        });
        if ok {
            chosen.push(v);
            extend_family(j, chosen, found);
            chosen.pop();
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    pub c: Degree,
    pub a_def: OracleValue,
    pub trace: Trace,
}

/// Level-by-level comparison of the staircase values with the counting values.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    #[serde(rename = "match")]
    pub matched: bool,
    pub levels: Vec<LevelCheck>,
    pub r: u32,
    pub r_def: u32,
    pub r_ceiling: u32,
}

impl CrossCheck {
    /// Description of the first disagreement, or `"none"`.
    pub fn first_mismatch(&self) -> String {
        if let Some(l) = self.levels.iter().find(|l| !l.a_def.agrees_with(l.c)) {
            return format!(
                "level {}: c = {}, a_def = {} (differences {:?})",
                l.level, l.c, l.a_def, l.trace.differences
            );
        }
        if self.r != self.r_def {
            return format!("reduction number: r = {}, r_def = {}", self.r, self.r_def);
        }
        "none".into()
    }

    /// Drop the per-degree traces, keeping only the compared values.
    pub fn without_traces(mut self) -> Self {
        for l in &mut self.levels {
            l.trace.differences.clear();
        }
        self
    }
}

/// Compare every `c_i` and `r` of `compute_report` with the counting values on `In(I)`.
///
/// The comparison is only meaningful in the original coordinates, so a report
/// that needed a coordinate change is rejected.
pub fn cross_check(gens: &[Polynomial], opts: ReportOptions) -> Result<CrossCheck> {
    let report = compute_report(gens, opts)?;
    if let Some(first) = report.retries.first() {
        return Err(Error::usage(format!(
            "the coordinate sequence is not filter-regular (change needed at level {})",
            first.level
        )));
    }
    cross_check_monomial(&report.initial, &report.c, report.r)
}

/// The comparison behind [`cross_check`], for a monomial ideal with known `c_i` and `r`.
pub fn cross_check_monomial(j: &MonomialIdeal, c: &[Degree], r: u32) -> Result<CrossCheck> {
    let d = c.len() - 1;
    let mut levels = Vec::with_capacity(c.len());
    for (i, ci) in c.iter().enumerate() {
        let trace = a_def_trace(j, i, default_ceiling(j, i))?;
        levels.push(LevelCheck {
            level: i,
            c: *ci,
            a_def: trace.value(),
            trace,
        });
    }
    let last = j.evaluate_zero(d);
    let r_ceiling = 2 * last.lcm_gens(0).map_or(0, |g| g.degree()) + 1;
    let r_def = r_def(&last, r_ceiling)?;
    let mut record = CrossCheck {
        matched: true,
        levels,
        r,
        r_def,
        r_ceiling,
    };
    record.matched = record.first_mismatch() == "none";
    if record.matched {
        Ok(record)
    } else {
        Err(Error::OracleMismatch(Box::new(record)))
    }
}
