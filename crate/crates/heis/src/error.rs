use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum HeisError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("scalar mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("double sequence bound violated at ({n}, {m}): |{value}| > {bound}")]
    BoundViolation { n: usize, m: usize, value: f64, bound: f64 },

    #[error("matrix is not symmetric: max asymmetry {0}")]
    NonSymmetric(f64),

    #[error("subsequence extraction exhausted the index caps")]
    ExtractionFailed(Box<crate::dlp::PartialExtraction>),
}

pub type Result<T> = std::result::Result<T, HeisError>;
