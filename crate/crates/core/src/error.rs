use thiserror::Error;

/// Errors produced by graph construction, the solvers and the file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph has {n} vertices; this solver handles at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("no solution of cardinality <= {0}")]
    BoundExceeded(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("interval {index} has left endpoint not below right endpoint")]
    InvalidInterval { index: usize },
    #[error("intervals share an endpoint")]
    DuplicateEndpoint,
    #[error("ordering is not a valid left-end ordering")]
    InvalidOrdering,
    #[error("edge ({0}, {1}) is not covered")]
    NotAVertexCover(usize, usize),
    #[error("reduction mismatch: {0}")]
    Reduction(String),
    #[error("solution is not a semipaired dominating set: {0}")]
    InvalidSolution(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no connected sample after {0} attempts")]
    RetriesExhausted(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
