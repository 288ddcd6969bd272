use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("multidegree mismatch: {left:?} vs {right:?}")]
    MultidegreeMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("invalid multidegree: {0}")]
    InvalidMultidegree(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The section handed to `extend` is not a shifted invariant of the
    /// expected multidegree and weight.
    #[error("section does not lie in the invariant space of multidegree {m:?}, weight {weight}")]
    NotInSpan { m: Vec<u32>, weight: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A pluggable basis source (e.g. an on-disk cache) failed.
    #[error("basis source: {0}")]
    Source(String),
}
