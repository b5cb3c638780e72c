use thiserror::Error;

/// Errors produced by root-system construction, Weyl operations, character
/// arithmetic, and restriction-matrix builders.
#[derive(Debug, Error)]
pub enum LieError {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight is not dominant: {0}")]
    NonDominant(String),

    #[error("invalid case: {0}")]
    InvalidCase(String),

    #[error("inexact integer division in restriction matrix (entry {0}/{1})")]
    InexactDivision(i64, i64),

    #[error("candidate roots do not form a simple system: {0}")]
    InvalidSimpleSystem(String),

    #[error("character decomposition failed: {0}")]
    DecompositionFailure(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
