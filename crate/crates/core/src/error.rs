use thiserror::Error;

use crate::io::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors surfaced by the library. Every variant is a usage error in the CLI
/// sense: the caller supplied inputs outside an operation's contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("total degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: u64, cap: u64 },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("functional `{functional}` cannot be applied: {reason}")]
    Incompatible {
        functional: &'static str,
        reason: String,
    },

    #[error("polynomial is not homogeneous in pair {pair} (variables {x}, {y})")]
    NotDoublyHomogeneous { pair: usize, x: usize, y: usize },

    #[error("coefficient {0} is not a rational integer")]
    NonIntegerCoefficient(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("matrix is not orthogonal: entry ({row}, {col}) of λλᵀ − I is {value}")]
    NotOrthogonal {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}")]
    Invalid(String),
}
