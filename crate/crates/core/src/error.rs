use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels.
///
/// Input problems (malformed data, violated preconditions) are kept apart from
/// [`ScarfError::Inconsistency`], which signals that a computed object failed
/// one of its own structural checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScarfError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arithmetic on an infinite coordinate is undefined")]
    InfiniteArithmetic,

    #[error("join of an empty list")]
    EmptyJoin,

    #[error("point index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("points {first} and {second} are equal")]
    DuplicatePoint { first: usize, second: usize },

    #[error("label count {labels} does not match point count {points}")]
    LabelCount { labels: usize, points: usize },

    #[error("coordinate {0} is not a nonnegative integer")]
    NotNatural(String),

    #[error("coordinate {0} is not an integer")]
    NotInteger(String),

    #[error("invalid coordinate {0:?}")]
    BadCoordinate(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("point set is not generic: {pairs} violating pair(s), first ({first:?})")]
    NotGeneric { pairs: usize, first: (usize, usize) },

    #[error("point set is not an antichain: points {0} and {1} are comparable")]
    NotAntichain(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("scale guard exceeded: {what} is {size}, limit {limit}")]
    ScaleGuard { what: &'static str, size: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("{0}")]
    Json(String),
}

pub type Result<T, E = ScarfError> = std::result::Result<T, E>;
