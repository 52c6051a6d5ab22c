use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a complex needs at least one vertex")]
    NoVertices,

    #[error("vertex label {label} is outside 1..={m}")]
    VertexOutOfRange { label: u32, m: u32 },

    #[error("{m} vertices exceed the {width}-bit vertex mask")]
    TooManyVertices { m: u32, width: u32 },

    /// An exhaustive computation was asked to run past its configured bound.
    #[error("{operation}: m = {m} exceeds the configured bound {bound}")]
    SizeBound { operation: &'static str, m: u32, bound: u32 },

    /// The operation is only defined for flag complexes.
    #[error("{operation} requires a flag complex (every missing face has two vertices)")]
    NotFlag { operation: &'static str },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("generator degree 0 has no formal inverse series")]
    ZeroDegree,

    #[error("denominator constant term must be +1 or -1, got {0}")]
    NonUnitConstant(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{operation} needs field coefficients, got {ring}")]
    NotAField { operation: &'static str, ring: String },

    #[error("{operation}: search space of {facets} maximal faces exceeds the cap {cap}")]
    SearchBound { operation: &'static str, facets: usize, cap: usize },

    /// Two routes that must agree did not; always a bug or a corpus anomaly.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
