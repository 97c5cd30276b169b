//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra {series}{rank}: supported are A1-A4, B2, B3, C2, D4")]
    UnsupportedAlgebra { series: String, rank: usize },

    #[error("unsupported scenario for {series}{rank}: {reason}")]
    UnsupportedScenario {
        series: String,
        rank: usize,
        reason: String,
    },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation requires a homogeneous polynomial")]
    NonHomogeneous,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("the scaling parameter must be a nonzero rational")]
    ZeroScalar,

    #[error("matrix is not skew-symmetric")]
    NonSkew,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("pencil has no nonzero member")]
    EmptyPencil,

    #[error("could not collect {needed} distinct regular parameters within a budget of {budget}")]
    InsufficientRegularParameters { needed: usize, budget: usize },

    #[error("divisor check rejected: {0}")]
    InvalidDivisor(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
