use thiserror::Error;

use crate::oracle::CrossCheck;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller broke an operation's precondition (length or ring mismatch, bad index, ...).
    #[error("usage error: {0}")]
    Usage(String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("generator {index} is not homogeneous (terms of degrees {low} and {high})")]
    NotHomogeneous { index: usize, low: u32, high: u32 },

    #[error("{modulus} is not a prime modulus")]
    NotPrime { modulus: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("the ideal is the whole ring")]
    UnitIdeal,

    /// Every attempted coordinate change left `c_level` infinite.
    #[error(
        "c_{level} stays infinite after {attempts} coordinate changes (E_{level} = {e_level:?}, E_{next} = {e_next:?})",
        next = level + 1
    )]
    RetriesExhausted {
        level: usize,
        attempts: u32,
        e_level: Vec<Vec<u32>>,
        e_next: Vec<Vec<u32>>,
    },

    #[error("r(I) infinite — evaluations not in general position")]
    InfiniteReduction,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("oracle mismatch at {}", .0.first_mismatch())]
    OracleMismatch(Box<CrossCheck>),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
