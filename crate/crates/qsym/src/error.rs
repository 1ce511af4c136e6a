//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the toolkit.
///
/// [`Error::TheoremViolation`] marks a computed outcome that contradicts a
/// structural statement the toolkit checks (for example a two-dimensional
/// space of invariant vectors). [`Error::ResourceCap`] marks a configured
/// resource guard. Everything else is an input or domain error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {0} is not a half-integer")]
    NonHalfIntegerExponent(String),
    #[error("unknown or unsupported symbol `{0}`")]
    Symbol(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("evaluation point is a pole of {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
