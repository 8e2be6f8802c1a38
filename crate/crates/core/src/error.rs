use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("input graph has no vertices")]
    EmptyGraph,

    #[error("input graph needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("{what} refuses graphs with more than {cap} vertices (got {n})")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("roots ({r}, {r1}) are not adjacent")]
    RootsNotAdjacent { r: usize, r1: usize },

    #[error("root {0} has incoming arcs")]
    RootHasInArcs(usize),

    #[error("induced subgraph is not bipartite")]
    NotBipartite,

    #[error("vertex set is not a connected vertex cover")]
    NotConnectedCover,

    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),

    #[error("constraint `{0}` is declared twice")]
    DuplicateConstraint(String),

    #[error("assignment is missing variable `{0}`")]
    MissingVariable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
