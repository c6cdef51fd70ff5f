//! Exact arithmetic foundation for the verification toolkit.
//!
//! The tower is fixed once and for all: arbitrary-precision rationals,
//! the 4-dimensional Q-algebra Q(i, sqrt2), sparse multivariate Laurent
//! polynomials over that field, their quotients, and truncated formal
//! power series in a designated variable. Everything is immutable and
//! every operation is exact; there is no floating point in this crate.

pub mod cyc;
pub mod laurent;
pub mod rat;
pub mod ratfn;
pub mod series;

pub use cyc::CycScalar;
pub use laurent::LaurentPoly;
pub use rat::Rat;
pub use ratfn::{rf_equal, RationalFn};
pub use series::{series_of, TruncSeries};

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// Two operands were built over different variable lists.
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    /// Division by zero, or a rational function with zero denominator.
    DivisionByZero,
    /// Series expansion requested at a pole (denominator vanishes at T=0).
    SingularExpansion,
    /// An exponent-vector operation overflowed the 64-bit bound.
    ExponentOverflow,
    /// A named variable is not part of the polynomial's variable list.
    UnknownVariable(String),
}

impl std::fmt::Display for ExactError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactError::VariableMismatch { left, right } => {
                write!(f, "variable lists differ: {:?} vs {:?}", left, right)
            }
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::SingularExpansion => {
                write!(f, "denominator vanishes at the expansion point")
            }
            ExactError::ExponentOverflow => write!(f, "exponent vector overflow"),
            ExactError::UnknownVariable(v) => write!(f, "unknown variable `{}`", v),
        }
    }
}

impl std::error::Error for ExactError {}
