use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph order {n} outside supported range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },

    #[error("{family}: parameter out of domain, requires {constraint}")]
    Domain { family: &'static str, constraint: String },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("{{{0}, {1}}} is a pendant edge; the transformation would be the identity")]
    PendantEdge(usize, usize),

    #[error("invalid shift set: {0}")]
    InvalidShift(String),

    #[error("graph is disconnected; distances are undefined")]
    Disconnected,

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("vector length {got} does not match graph order {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector is not a unit vector (norm {norm})")]
    NonUnitVector { norm: f64 },

    #[error("vector has no nonnegative entry")]
    NegativeVector,

    #[error("no sign change in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("root {root} could not be certified as the largest real root")]
    RootNotCertified { root: f64 },

    #[error("{what} exceeds the limit {limit} (got {got})")]
    ScopeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("outside the proven range: {0}")]
    OutsideRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
