//! Command-line driver for `castelnuovo`.

pub mod input;

use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use castelnuovo::oracle::cross_check;
use castelnuovo::regularity::{zerodivisor_flags, RegularityReport};
use castelnuovo::{compute_report, curve_report, CurveReport, Degree, Error, ReportOptions};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use input::{parse_input, parse_input_with, InputSpec, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RETRIES: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "castelnuovo", version, about = "Castelnuovo-Mumford regularity over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// reg(S/I), the c_i, r and the partial regularities
    Compute(CommonArgs),
    /// Curve invariants (requires k[x_{n-1}, x_n] to be a Noether normalization)
    Curve(CommonArgs),
    /// Compare the staircase values with definitional Hilbert-function counts
    Oracle(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Input file: `ring <p> <names...>`, optional `mode monomial`, one generator per line
    pub file: PathBuf,
    /// Characteristic; replaces the modulus in the file header
    #[arg(long = "char", value_name = "P")]
    pub characteristic: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coordinate changes tried per level before giving up
    #[arg(long, default_value_t = 10)]
    pub max_retries: u32,
    /// Print only reg_t(S/I)
    #[arg(long, value_name = "T")]
    pub partial: Option<usize>,
    /// Treat every generator line as a monomial
    #[arg(long)]
    pub monomial: bool,
    /// Skip S-pairs by Buchberger's chain criterion (same basis, usually faster)
    #[arg(long)]
    pub chain_criterion: bool,
    #[arg(long)]
    pub json: bool,
    /// Extra detail: initial ideal and levels, or per-degree oracle traces
    #[arg(long)]
    pub verbose: bool,
}

impl CommonArgs {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            seed: self.seed,
            max_retries: self.max_retries,
            chain_criterion: self.chain_criterion,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_)
        | Error::ZeroPolynomial
        | Error::NotHomogeneous { .. }
        | Error::NotPrime { .. }
        | Error::Parse { .. }
        | Error::UnitIdeal => EXIT_USAGE,
        Error::RetriesExhausted { .. } | Error::InfiniteReduction => EXIT_RETRIES,
        Error::OracleMismatch(_) => EXIT_MISMATCH,
        Error::Inconsistent(_) => EXIT_INTERNAL,
    }
}

/// Run a parsed command line, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Compute(args) => load(args).and_then(|spec| compute(&spec, args, out)),
        Command::Curve(args) => load(args).and_then(|spec| curve(&spec, args, out)),
        Command::Oracle(args) => load(args).and_then(|spec| oracle(&spec, args, out)),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let code = e.downcast_ref::<Error>().map_or(EXIT_USAGE, exit_code);
            let _ = writeln!(err, "error: {e:#}");
            if let Some(Error::OracleMismatch(record)) = e.downcast_ref::<Error>() {
                if let Ok(text) = serde_json::to_string_pretty(record) {
                    let _ = writeln!(out, "{text}");
                }
            }
            code
        }
    }
}

fn load(args: &CommonArgs) -> anyhow::Result<InputSpec> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("cannot read {}", args.file.display()))?;
    Ok(parse_input_with(&text, args.characteristic, args.monomial)?)
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Serialize)]
struct Partial {
    t: usize,
    reg_t: Degree,
}

fn compute(spec: &InputSpec, args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let report = compute_report(&spec.generators, args.options())?;
    if let Some(t) = args.partial {
        let partial = Partial {
            t,
            reg_t: report.partial(t),
        };
        if args.json {
            return emit_json(&partial, out);
        }
        writeln!(out, "reg_{t} = {}", partial.reg_t)?;
        return Ok(());
    }
    if args.json {
        return emit_json(&report, out);
    }
    write_report(&report, spec, args.verbose, out)?;
    Ok(())
}

fn write_report(
    report: &RegularityReport,
    spec: &InputSpec,
    verbose: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "n = {}, p = {}, d = {}", report.n, report.p, report.d)?;
    if verbose {
        writeln!(out, "In(I) = {}", report.initial)?;
        for (i, level) in report.levels.iter().enumerate() {
            writeln!(out, "J_{i} = {level}")?;
        }
    }
    writeln!(out, "c = {}", list(&report.c))?;
    writeln!(out, "r = {}", report.r)?;
    writeln!(out, "reg = {}", report.reg)?;
    writeln!(out, "reg_t = {}", list(&report.reg_t))?;
    writeln!(out, "bound = {}", list(&report.bound))?;
    writeln!(out, "attained at t = {}", report.attained_t)?;
    let names = spec.ring.names();
    let n = names.len();
    for (i, zd) in zerodivisor_flags(report).iter().enumerate() {
        let var = &names[n - 1 - i];
        let word = if *zd { "non-zerodivisor" } else { "zerodivisor" };
        writeln!(out, "level {i}: {var} is a {word}")?;
    }
    if report.retries.is_empty() {
        writeln!(out, "retries: none")?;
    }
    for r in &report.retries {
        writeln!(
            out,
            "retry: level {} attempt {} seed {} matrix {} {}",
            r.level,
            r.attempt,
            r.seed,
            r.digest,
            if r.accepted { "accepted" } else { "rejected" }
        )?;
    }
    for (i, set) in &report.corners {
        let corners: Vec<String> = set.iter().map(ToString::to_string).collect();
        writeln!(out, "F_{i} = {{{}}}", corners.join(", "))?;
    }
    Ok(())
}

fn curve(spec: &InputSpec, args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let report = curve_report(&spec.generators)?;
    if args.json {
        return emit_json(&report, out);
    }
    write_curve(&report, out)?;
    Ok(())
}

fn write_curve(report: &CurveReport, out: &mut dyn Write) -> std::io::Result<()> {
    fn show<T: std::fmt::Display>(v: &Option<T>) -> String {
        v.as_ref().map_or_else(|| "n/a".to_string(), ToString::to_string)
    }
    writeln!(out, "n = {}, p = {}", report.n, report.p)?;
    writeln!(out, "noether_ok = {}", report.noether_ok)?;
    writeln!(out, "c1 = {}", show(&report.c1))?;
    writeln!(out, "r = {}", show(&report.r))?;
    writeln!(out, "reg = {}", show(&report.reg))?;
    writeln!(out, "H(E) = {}", show(&report.h_e))?;
    writeln!(out, "H(Re) = {}", show(&report.h_re))?;
    let shift = match report.last_shift {
        Some(castelnuovo::regularity::LastShift::Degree(b)) => b.to_string(),
        Some(castelnuovo::regularity::LastShift::CohenMacaulay) => "Cohen-Macaulay, F_{n-1}=0".into(),
        None => "n/a".into(),
    };
    writeln!(out, "last_shift = {shift}")?;
    if let Some(note) = &report.note {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

fn oracle(spec: &InputSpec, args: &CommonArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let mut record = cross_check(&spec.generators, args.options())?;
    if !args.verbose {
        record = record.without_traces();
    }
    if args.json {
        return emit_json(&record, out);
    }
    writeln!(out, "match = {}", record.matched)?;
    for l in &record.levels {
        writeln!(out, "level {}: c = {}, a_def = {} (ceiling {})", l.level, l.c, l.a_def, l.trace.ceiling)?;
        if args.verbose {
            writeln!(out, "  differences = {}", list(&l.trace.differences))?;
        }
    }
    writeln!(out, "r = {}, r_def = {} (ceiling {})", record.r, record.r_def, record.r_ceiling)?;
    Ok(())
}
