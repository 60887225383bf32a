use thiserror::Error;

use crate::circle::PointIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a circle model needs at least one accumulation point")]
    NoSegments,

    #[error("point {point} does not belong to a model with {segments} segments")]
    SegmentOutOfRange { point: PointIndex, segments: usize },

    #[error("empty interval: both ends are {0}")]
    EmptyInterval(PointIndex),

    #[error("{0} and {1} do not form an arc (equal or adjacent endpoints)")]
    InvalidArc(PointIndex, PointIndex),

    #[error("arcs {0} and {1} do not cross")]
    NotCrossing(String, String),

    #[error("endpoints {0} and {1} lie in different segments")]
    CrossSegment(PointIndex, PointIndex),

    #[error("insufficient depth: {0}")]
    InsufficientDepth(String),

    #[error("insufficient window: {0}")]
    InsufficientWindow(String),

    #[error("index {index} out of range (expected {range})")]
    IndexOutOfRange { index: usize, range: String },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("unknown arc name `{0}`")]
    UnknownName(String),

    #[error("integer overflow during sparse elimination")]
    Overflow,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
