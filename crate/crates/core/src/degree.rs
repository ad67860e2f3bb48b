use std::fmt;

use serde::{Serialize, Serializer};

/// A value in `ℕ ∪ {−∞}`.
///
/// `c_i(I)` and the partial regularities take the value `−∞` when the
/// corresponding graded module vanishes. The derived order puts
/// [`Degree::NegInfinity`] below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn is_neg_infinity(self) -> bool {
        matches!(self, Degree::NegInfinity)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(v) => Some(v),
        }
    }

    /// Lift to `i64` with `−∞` mapped to `None`, for comparisons against signed bounds.
    pub fn as_i64(self) -> Option<i64> {
        self.finite().map(i64::from)
    }
}

impl From<u32> for Degree {
    fn from(v: u32) -> Self {
        Degree::Finite(v)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-infinity"),
            Degree::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// `−∞` is written as the JSON string `"-infinity"`, finite values as integers.
impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => serializer.serialize_str("-infinity"),
            Degree::Finite(v) => serializer.serialize_u32(*v),
        }
    }
}
