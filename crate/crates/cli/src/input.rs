//! Input files.
//!
//! ```text
//! ring 32003 x1 x2 x3 x4
//! # optional
//! mode monomial
//! x1*x2 - x3*x4
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use castelnuovo::ring::{parse_monomial, parse_polynomial};
use castelnuovo::{Error, Polynomial, Result, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Polynomial,
    Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub ring: Arc<Ring>,
    pub mode: Mode,
    pub generators: Vec<Polynomial>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Move a single-line parse error onto `line`, shifting its column by `offset`.
fn relocate(err: Error, line: usize, offset: usize) -> Error {
    match err {
        Error::Parse { column, message, .. } => parse_error(line, column + offset, message),
        other => other,
    }
}

pub fn parse_input(text: &str) -> Result<InputSpec> {
    parse_input_with(text, None, false)
}

/// Parse with an optional modulus replacing the header's, and optionally forcing monomial mode.
pub fn parse_input_with(text: &str, modulus: Option<u32>, monomial: bool) -> Result<InputSpec> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing `ring` header"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("ring") {
        return Err(parse_error(header_line, 1, "expected `ring <p> <names...>`"));
    }
    let p_text = words
        .next()
        .ok_or_else(|| parse_error(header_line, header.len() + 1, "missing modulus"))?;
    let p: u32 = p_text.parse().map_err(|_| {
        let column = header.find(p_text).map_or(1, |c| c + 1);
        parse_error(header_line, column, format!("bad modulus {p_text:?}: expected a prime below 2^32"))
    })?;
    let names: Vec<String> = words.map(str::to_string).collect();
    if names.is_empty() {
        return Err(parse_error(header_line, header.len() + 1, "no variables declared"));
    }
    let ring = Ring::new(modulus.unwrap_or(p), names)?;

    let mut mode = if monomial { Mode::Monomial } else { Mode::Polynomial };
    let mut generators = Vec::new();
    let mut first = true;
    for (line, raw) in lines {
        let trimmed = raw.trim();
        if first && trimmed.split_whitespace().next() == Some("mode") {
            match trimmed.split_whitespace().collect::<Vec<_>>()[..] {
                ["mode", "monomial"] => mode = Mode::Monomial,
                ["mode", "polynomial"] => {}
                _ => return Err(parse_error(line, 1, "expected `mode monomial`")),
            }
            first = false;
            continue;
        }
        first = false;
        let offset = raw.len() - raw.trim_start().len();
        let g = match mode {
            Mode::Monomial => {
                let e = parse_monomial(&ring, trimmed).map_err(|e| relocate(e, line, offset))?;
                Polynomial::monomial(&ring, e, 1)
            }
            Mode::Polynomial => {
                let f = parse_polynomial(&ring, trimmed).map_err(|e| relocate(e, line, offset))?;
                if let Some((low, high)) = f.degree_range().filter(|(l, h)| l != h) {
                    return Err(parse_error(
                        line,
                        offset + 1,
                        format!("generator is not homogeneous (terms of degrees {low} and {high})"),
                    ));
                }
                f
            }
        };
        generators.push(g);
    }
    if generators.is_empty() {
        return Err(parse_error(header_line, 1, "no generators"));
    }
    Ok(InputSpec { ring, mode, generators })
}

impl InputSpec {
    pub fn n(&self) -> usize {
        self.ring.n()
    }

    /// Emit the file format; `parse_input(&spec.to_text())` gives back `spec`.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring {}", self.ring.modulus());
        for name in self.ring.names() {
            let _ = write!(out, " {name}");
        }
        out.push('\n');
        if self.mode == Mode::Monomial {
            out.push_str("mode monomial\n");
        }
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}
