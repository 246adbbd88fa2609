use thiserror::Error;

/// Errors produced by space construction, searches and constant evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors need at least 2 coordinates, found {0}")]
    DimensionTooSmall(usize),

    #[error("non-finite coordinate in input")]
    NonFinite,

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("polygon vertex set is not centrally symmetric")]
    Asymmetric,

    #[error("origin is not strictly inside the polygon")]
    OriginNotInterior,

    #[error("polygon vertices are not in convex position")]
    NonConvex,

    #[error("degenerate polygon: {0}")]
    Degenerate(&'static str),

    #[error("no finite extreme set for this space")]
    NoFiniteExtremeSet,

    #[error("expected a unit vector, norm is {0}")]
    NotUnit(f64),

    #[error("direction is parallel to the base vector")]
    Parallel,

    #[error("completion failed: no sign change of the defect within |s| <= {0}")]
    CompletionFailed(f64),

    #[error("objective is not declared convex; vertex enumeration is not exact for it")]
    NonConvexObjective,

    #[error("objective returned a non-finite value at t = {0}")]
    NonFiniteObjective(f64),

    #[error("cannot parse {what}: {input}")]
    Parse { what: &'static str, input: String },

    #[error("missing parameter {0}")]
    MissingParameter(&'static str),

    #[error("unknown constant: {0}")]
    UnknownConstant(String),

    #[error("check {check} does not apply to space {space}")]
    NotApplicable { check: String, space: String },

    #[error("unknown profile: {0}")]
    UnknownProfile(String),

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("strategy {0} is not available here: {1}")]
    UnsupportedStrategy(String, &'static str),

    #[error("objective has no feasible point on the searched set")]
    NoFeasiblePoint,

    #[error("empty space list")]
    EmptySpaceList,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::InvalidParameter {
        name,
        value,
        reason,
    }
}
