use crate::graph::Graph;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),

    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{family} needs size at least {min}, got {got}")]
    SizeBelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("the forbidden graph must have at least one vertex")]
    EmptyPattern,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("expected a graph isomorphic to {expected}, got {actual}")]
    PatternMismatch { expected: Graph, actual: Graph },

    /// A procedure reached a state that its correctness argument rules out.
    #[error("consistency failure: {0}")]
    Consistency(String),

    #[error("brute-force search space of {size} edit sets exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("replay failed at step {index}: {source}")]
    Replay {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
