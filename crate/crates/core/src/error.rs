use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge {{{0}, {1}}} is not in the graph")]
    EdgeAbsent(Vertex, Vertex),

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("colouring covers {got} edges but the graph has {expected}")]
    IncompleteColoring { expected: usize, got: usize },

    #[error("colour {color} outside 1..={num_colors}")]
    ColorOutOfRange { color: u8, num_colors: u8 },

    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(Vertex),

    #[error("requested {cap} paths but only {max} fit")]
    CapTooLarge { cap: usize, max: usize },

    #[error("witnesses have different terminal sets")]
    TerminalMismatch,

    #[error("no graph with girth >= 5 and min degree >= {delta} on {n} vertices found after {attempts} attempts")]
    GenerationFailed { n: usize, delta: usize, attempts: usize },

    #[error("greedy extension failed at terminal {at} of path {path}: {reason}")]
    ExtensionFailed { path: usize, at: Vertex, reason: String },

    #[error("instance too large for this search: {0}")]
    TooLarge(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
