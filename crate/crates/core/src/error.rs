use thiserror::Error;

/// Errors raised by distribution construction and the bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distribution has no atoms")]
    Empty,

    #[error("masses sum to {sum}, expected 1 within {tolerance:e}")]
    NotNormalized { sum: f64, tolerance: f64 },

    #[error("negative mass {value} at position {index}")]
    NegativeMass { index: usize, value: f64 },

    #[error("mass {value} at position {index} is not a finite number")]
    NonFiniteMass { index: usize, value: f64 },

    #[error("Rényi order must be non-negative, got {0}")]
    NegativeAlpha(f64),

    #[error("row {0} of the joint distribution has zero total mass")]
    EmptyRow(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ragged joint distribution: row {row} has {found} columns, expected {expected}")]
    RaggedJoint {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("atom index {index} out of range for support of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
