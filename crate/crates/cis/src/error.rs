use thiserror::Error;

/// Errors produced by semiring construction, value operations, and the
/// representation algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CisError {
    #[error("instance mismatch: cannot combine {left} with {right}")]
    InstanceMismatch {
        left: &'static str,
        right: &'static str,
    },

    #[error("invalid instance parameters: {0}")]
    InvalidParams(String),

    #[error("malformed value: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("need at least {0} distinct samples, got {1}")]
    TooFewSamples(usize, usize),

    #[error("root vector must be non-empty")]
    EmptyRoots,

    #[error("polynomial must have degree at least 1")]
    DegreeZero,

    #[error("matrix must be square")]
    NotSquare,

    #[error("matrix order {order} exceeds the permanent limit of {limit}")]
    PermanentTooLarge { order: usize, limit: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a syl-representation: {0}")]
    NotSylRep(String),

    #[error("pair is not sorted: {0}")]
    NotSorted(String),

    #[error("column sums must be non-increasing ({0}); normalize the term first")]
    NotFlushable(String),

    #[error("enumeration space too large: {0}")]
    EnumerationTooLarge(String),
}

pub type Result<T> = std::result::Result<T, CisError>;
