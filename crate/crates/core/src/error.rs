use thiserror::Error;

/// Errors raised by the numerical and exact engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index {index} is below the smallest admissible index {min}")]
    IndexOutOfRange { index: i64, min: i64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("trace window N={window} must satisfy 1 <= N <= M={size}")]
    InvalidWindow { window: usize, size: usize },

    #[error("requested size {requested} exceeds the configured maximum {max}")]
    ResourceLimit { requested: usize, max: usize },

    #[error("Landau level {0} is not implemented (supported: 0, 1)")]
    UnsupportedLevel(usize),

    #[error("unknown ordering strategy `{0}` (expected left_normal or right_normal)")]
    UnsupportedOrdering(String),

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} lies on the essential spectrum; the index is undefined there")]
    BoundaryPoint(String),

    #[error("series entry ({m}, {n}) changed by {difference:e} when the working precision was doubled")]
    PrecisionLoss { m: usize, n: usize, difference: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
