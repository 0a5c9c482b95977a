use thiserror::Error;

/// Errors produced by matrix and ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("size {got} is too small, need at least {min}")]
    InvalidSize { got: usize, min: usize },

    #[error("matrix rows must all have length {expected}")]
    NonSquare { expected: usize },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("minor symbol row and column lists must have equal length ({rows} vs {cols})")]
    UnevenSymbol { rows: usize, cols: usize },

    #[error("element is not a unit")]
    NotAUnit,

    #[error("matrix is not invertible: determinant is not a unit")]
    NotInvertible,

    #[error("matrix is not alternating")]
    NotAlternating,

    #[error("size must be even, got {0}")]
    OddSize(usize),

    #[error("alternating factor must have determinant 1")]
    BadAlternatingDet,

    #[error("witness pair does not satisfy the left-sided identity")]
    InvalidWitness,

    #[error("identity {0} failed to hold")]
    IdentityFailed(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
