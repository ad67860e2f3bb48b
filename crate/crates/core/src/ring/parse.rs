//! Text syntax for polynomials: `x1^3*x3^2 - x2^4*x4`, `2*x1*x2 + x3^2`.
//!
//! Terms are joined by `+`/`-`, factors within a term by `*`. A factor is an
//! integer (reduced mod p) or a variable with an optional `^exponent`.
//! Whitespace is ignored.

use std::iter::Peekable;
use std::str::CharIndices;
use std::sync::Arc;

use super::{ExponentVector, Polynomial, Ring};
use crate::{Error, Result};

struct Parser<'a> {
    ring: &'a Ring,
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.text[..at].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn pos(&mut self) -> usize {
        self.peek().map_or(self.text.len(), |(i, _)| i)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos();
        let mut end = start;
        while let Some((i, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            end = i + c.len_utf8();
        }
        &self.text[start..end]
    }

    fn polynomial(&mut self) -> Result<Vec<(ExponentVector, i64)>> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        if let Some((_, c @ ('+' | '-'))) = self.peek() {
            self.chars.next();
            sign = if c == '-' { -1 } else { 1 };
        }
        loop {
            let (exp, coeff) = self.term()?;
            terms.push((exp, sign * coeff));
            match self.peek() {
                None => return Ok(terms),
                Some((_, '+')) => sign = 1,
                Some((_, '-')) => sign = -1,
                Some((i, c)) => return Err(self.error(i, format!("unexpected character {c:?}"))),
            }
            self.chars.next();
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, i64)> {
        let p = i64::from(self.ring.modulus());
        let mut exp = vec![0u32; self.ring.n()];
        let mut coeff = 1i64;
        loop {
            match self.peek() {
                Some((_, c)) if c.is_ascii_digit() => {
                    let digits = self.digits();
                    let value = digits
                        .bytes()
                        .fold(0i64, |acc, b| (acc * 10 + i64::from(b - b'0')) % p);
                    coeff = coeff * value % p;
                }
                Some((start, c)) if c.is_ascii_alphabetic() || c == '_' => {
                    let mut end = start;
                    while let Some((i, c)) =
                        self.chars.next_if(|(_, c)| c.is_ascii_alphanumeric() || *c == '_')
                    {
                        end = i + c.len_utf8();
                    }
                    let name = &self.text[start..end];
                    let var = self
                        .ring
                        .var_index(name)
                        .ok_or_else(|| self.error(start, format!("unknown variable {name:?}")))?;
                    let mut power = 1u32;
                    if let Some((_, '^')) = self.peek() {
                        self.chars.next();
                        let at = self.pos();
                        let digits = self.digits();
                        power = digits
                            .parse()
                            .map_err(|_| self.error(at, "bad exponent: expected a non-negative integer"))?;
                    }
                    exp[var] = exp[var]
                        .checked_add(power)
                        .ok_or_else(|| self.error(start, "bad exponent: overflow"))?;
                }
                Some((i, c)) => return Err(self.error(i, format!("expected a factor, found {c:?}"))),
                None => return Err(self.error(self.text.len(), "expected a factor, found end of input")),
            }
            match self.peek() {
                Some((_, '*')) => {
                    self.chars.next();
                }
                _ => return Ok((exp.into(), coeff)),
            }
        }
    }
}

fn parse_terms(ring: &Ring, text: &str) -> Result<Vec<(ExponentVector, i64)>> {
    let mut parser = Parser {
        ring,
        text,
        chars: text.char_indices().peekable(),
    };
    parser.polynomial()
}

/// Parse a polynomial in the given ring. Errors report line 1 and a 1-based column.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    Ok(Polynomial::from_terms(ring, parse_terms(ring, text)?))
}

/// Parse a single nonzero term and return its exponent vector; the coefficient is discarded.
pub fn parse_monomial(ring: &Arc<Ring>, text: &str) -> Result<ExponentVector> {
    let terms = parse_terms(ring, text)?;
    let f = Polynomial::from_terms(ring, terms.iter().cloned());
    if terms.len() != 1 || f.is_zero() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected a single nonzero monomial".into(),
        });
    }
    Ok(terms.into_iter().next().unwrap().0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring4() -> Arc<Ring> {
        Ring::with_vars(32003, 4).unwrap()
    }

    #[test]
    fn parses_binomial() {
        let r = ring4();
        let f = parse_polynomial(&r, "x1^3*x3^2 - x2^4*x4").unwrap();
        assert_eq!(f.to_string(), "x1^3*x3^2 - x2^4*x4");
        let g = parse_polynomial(&r, "  -  2 * x1*x1 + 32005*x2^2 ").unwrap();
        assert_eq!(g.to_string(), "-2*x1^2 + 2*x2^2");
    }

    #[test]
    fn constants_and_zero() {
        let r = ring4();
        assert!(parse_polynomial(&r, "x1 - x1").unwrap().is_zero());
        assert!(parse_polynomial(&r, "32003").unwrap().is_zero());
        assert_eq!(parse_polynomial(&r, "5").unwrap().to_string(), "5");
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring4();
        match parse_polynomial(&r, "x1*y2") {
            Err(Error::Parse { column, message, .. }) => {
                assert_eq!(column, 4);
                assert!(message.contains("unknown variable"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial(&r, "x1^"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_polynomial(&r, "x1 + "), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x1 x2"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
    }

    #[test]
    fn monomials() {
        let r = Ring::with_vars(32003, 2).unwrap();
        assert_eq!(parse_monomial(&r, "x1*x2").unwrap(), ExponentVector::from([1, 1]));
        assert_eq!(parse_monomial(&r, "x2^5").unwrap(), ExponentVector::from([0, 5]));
        assert!(parse_monomial(&r, "x1 + x2").is_err());
        assert!(parse_monomial(&r, "0*x1").is_err());
    }
}
