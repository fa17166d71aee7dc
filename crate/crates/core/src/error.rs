use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {index} has {found} distinct vertices, expected {expected}")]
    EdgeArity {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("vertex {vertex} is out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("argument out of range: {0}")]
    ArgumentRange(String),

    #[error("hypergraph has no vertices")]
    EmptyVertexSet,

    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight vector entry {index} is not finite")]
    NonFinite { index: usize },

    #[error("weight vector is not normalized (r-norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("weight vector entry {index} is negative")]
    NegativeEntry { index: usize },

    #[error("power iteration stopped after {iterations} iterations with bracket [{lower}, {upper}]")]
    IterationLimit { iterations: usize, lower: f64, upper: f64 },

    #[error("uniformity mismatch: host is {host}-uniform, pattern is {pattern}-uniform")]
    UniformityMismatch { host: usize, pattern: usize },

    #[error("invalid two-coloring: {0}")]
    InvalidColoring(String),

    #[error("golden-section search did not converge in {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("hypergraph is disconnected")]
    Disconnected,

    #[error("hypergraph too small: {0}")]
    TooSmall(String),
}
