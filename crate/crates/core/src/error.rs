use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {degree} exceeds ambient dimension {n}")]
    DegreeOverflow { degree: usize, n: usize },
    #[error("ambient dimension {n} exceeds the configured cap {cap}")]
    AmbientTooLarge { n: usize, cap: usize },
    #[error("invalid blade: {0}")]
    InvalidBlade(String),
    #[error("covector must be nonzero")]
    ZeroCovector,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("induced quotient map is ill defined: lambda wedge the source divisor is not inside the target divisor")]
    IllDefinedQuotientMap,
    #[error("the zero subspace never saturates")]
    NeverSaturates,
    #[error("covectors are linearly dependent")]
    DependentCovectors,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
