use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge {{{0}, {1}}} is not in the graph")]
    EdgeNotFound(Vertex, Vertex),

    #[error("edge {{{0}, {1}}} has a non-finite grade")]
    NonFiniteGrade(Vertex, Vertex),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("degenerate point cloud: {0}")]
    Degenerate(String),

    #[error("invalid bandwidth {0}; must be positive")]
    InvalidBandwidth(f64),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("unknown dataset kind `{0}`")]
    UnknownDataset(String),

    #[error("simplex budget of {budget} exceeded")]
    SimplexBudget { budget: usize },

    #[error("reduced graph is not a subgraph: {0}")]
    NotSubgraph(String),

    #[error("triangle {{{0}, {1}, {2}}} references an edge missing from the graph")]
    MissingFacet(Vertex, Vertex, Vertex),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
