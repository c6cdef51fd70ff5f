//! Local-factor verification.
//!
//! The non-archimedean side is fully symbolic: Laurent polynomials in
//! the three unramified parameters, the signed eight-element group
//! action on them, and the alternating-sum formula for the spherical
//! functional. The archimedean side is numeric at controlled precision:
//! an arbitrary-precision complex layer over MPFR, a Stirling-based
//! gamma, a vertical-contour barnes integral for the hypergeometric
//! kernel, and the transform identities built from them.

pub mod arch;
pub mod gammaz;
pub mod lfactor;
pub mod meijer;
pub mod mellin;
pub mod real;
pub mod satake;
pub mod tate;
pub mod trace;

/// Errors raised by local-factor computations.
#[derive(Debug, Clone, PartialEq)]
pub enum LocalError {
    /// Symbolic arithmetic failed (variable mismatch, singular series).
    Exact(String),
    /// A numeric parameter instance hit the degenerate locus.
    DegenerateParameters(String),
    /// Quadrature failed to reach the requested accuracy.
    PrecisionFailure(String),
    /// An argument outside the supported exact classification.
    UnsupportedArgument(String),
    /// Hypotheses on integer inputs are violated.
    Hypothesis(String),
}

impl std::fmt::Display for LocalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LocalError::Exact(s) => write!(f, "exact arithmetic failure: {}", s),
            LocalError::DegenerateParameters(s) => write!(f, "degenerate parameters: {}", s),
            LocalError::PrecisionFailure(s) => write!(f, "precision failure: {}", s),
            LocalError::UnsupportedArgument(s) => write!(f, "unsupported argument: {}", s),
            LocalError::Hypothesis(s) => write!(f, "hypothesis violated: {}", s),
        }
    }
}

impl std::error::Error for LocalError {}

impl From<spin4_exact::ExactError> for LocalError {
    fn from(e: spin4_exact::ExactError) -> Self {
        LocalError::Exact(e.to_string())
    }
}

impl From<spin4_core::CoreError> for LocalError {
    fn from(e: spin4_core::CoreError) -> Self {
        LocalError::Hypothesis(e.to_string())
    }
}
