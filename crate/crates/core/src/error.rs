use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rank {0}: the quaternionic rank must be at least 1")]
    InvalidRank(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("basis quality: {what} deviates from orthonormal by {deviation:e} (tolerance {tolerance:e})")]
    BasisQuality {
        what: String,
        deviation: f64,
        tolerance: f64,
    },

    #[error("index {index} out of range for {len} modules")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("metric scale {index} is {value}, all scales must be positive")]
    NonPositiveScale { index: usize, value: f64 },

    #[error("expected {expected} metric scales, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("interval does not isolate a simple root (endpoint signs {lo_sign} and {hi_sign})")]
    NonIsolating { lo_sign: i8, hi_sign: i8 },

    #[error("root refinement stalled at relative residual {residual:e} (tolerance {tolerance:e})")]
    RefinementFailed { residual: f64, tolerance: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
