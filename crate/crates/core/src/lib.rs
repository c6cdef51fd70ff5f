//! Structure theory for the rank-two symplectic similitude group and the
//! finite computations built on it: the weight lattice and Weyl group,
//! the two-factor branching law with an independent character oracle,
//! explicit 4x4 matrix models, exact highest-weight modules, discrete
//! series packet and Hodge bookkeeping, and the regulator pairing
//! constants and term assembly.

pub mod branching;
pub mod character;
pub mod hodge;
pub mod irrep;
pub mod isotypic;
pub mod ktype;
pub mod matrices;
pub mod packet;
pub mod pairing;
pub mod symbasis;
pub mod wedge;
pub mod weight;
pub mod weyl;

pub use weight::{CompactWeight, Weight};

/// Errors raised by structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// A weight triple violating the parity constraint `k + k' = c (mod 2)`.
    ParityViolation { k: i64, kp: i64, c: i64 },
    /// An operation requiring dominance received a non-dominant weight.
    NotDominant { k: i64, kp: i64 },
    /// A named hypothesis on the inputs fails.
    HypothesisViolation(String),
    /// Index outside the documented valid range.
    IndexOutOfRange(String),
    /// Input matrix not where it must be (singular, or outside the algebra).
    BadMatrix(String),
    /// Internal consistency failure that indicates a bug, never bad input.
    Internal(String),
}

impl std::fmt::Display for CoreError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoreError::ParityViolation { k, kp, c } => {
                write!(f, "parity violation: ({}, {}, {}) needs k+k' = c mod 2", k, kp, c)
            }
            CoreError::NotDominant { k, kp } => {
                write!(f, "weight ({}, {}) is not dominant", k, kp)
            }
            CoreError::HypothesisViolation(s) => write!(f, "hypothesis violated: {}", s),
            CoreError::IndexOutOfRange(s) => write!(f, "index out of range: {}", s),
            CoreError::BadMatrix(s) => write!(f, "bad matrix input: {}", s),
            CoreError::Internal(s) => write!(f, "internal consistency error: {}", s),
        }
    }
}

impl std::error::Error for CoreError {}
