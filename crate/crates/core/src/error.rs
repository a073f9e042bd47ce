use thiserror::Error;

use crate::model::Variant;
use crate::verify::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("identifier {0:?} must match [A-Za-z0-9_]+")]
    BadIdentifier(String),
    #[error("malformed block token {0:?}, expected char/color")]
    BadToken(String),
    #[error("unknown variant {0:?}")]
    BadVariant(String),
    #[error("indices are not strictly increasing")]
    NonIncreasing,
    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("pattern is not a permutation string")]
    NotPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver expects variant {expected}, got {got}")]
    WrongVariant { expected: Variant, got: Variant },
    #[error("pattern is not a permutation string")]
    NotPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("invalid X3C instance: {0}")]
    InvalidX3c(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("reduction needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("reduction map does not belong to this input")]
    MapMismatch,
    #[error("solution does not verify: {0}")]
    Unverified(Violation),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("not a Hamiltonian cycle: {0}")]
    NotHamiltonian(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("inconsistent generator parameters: {0}")]
    Inconsistent(String),
}

/// Errors from the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    /// Grammar violation; `line` is 1-based (0 when the whole file is at fault).
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// The text parsed but describes an invalid object.
    #[error("invalid: {0}")]
    Invalid(String),
}

impl IoError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        IoError::Parse {
            line,
            message: message.into(),
        }
    }
}
