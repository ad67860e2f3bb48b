//! Castelnuovo-Mumford regularity of homogeneous ideals over prime fields.
//!
//! The pipeline computes a reduced Gröbner basis under graded reverse
//! lexicographic order, evaluates the initial ideal at `x_n = ... = x_{n-i+1} = 0`
//! (and additionally `x_{n-i} = 1`), and reads the invariants `c_i(I)` and
//! `r(I)` off the staircase corners of the evaluated monomial ideals:
//!
//! ```text
//! reg(S/I)   = max{c_0(I), ..., c_{d-1}(I), r(I)}
//! reg_t(S/I) = max{c_0(I), ..., c_t(I)}
//! ```
//!
//! valid as soon as every level passes the finiteness test on its exponent
//! sets. When a level fails, a random linear change of the leading variables
//! is applied and only that level onward is recomputed.
//!
//! The [`oracle`] module recomputes the same invariants straight from their
//! definitions (graded colon comparisons and Hilbert function counts) and is
//! used to cross-check the corner formulas.

mod degree;
mod error;

pub mod groebner;
pub mod monideal;
pub mod oracle;
pub mod regularity;
pub mod ring;
pub mod staircase;

pub use degree::Degree;
pub use error::{Error, Result};
pub use groebner::{buchberger, initial_ideal, GroebnerBasis};
pub use monideal::MonomialIdeal;
pub use regularity::{compute_report, curve_report, CurveReport, RegularityReport, ReportOptions};
pub use ring::{ExponentVector, Polynomial, Ring};
