use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what} is limited to {cap} vertices, graph has {vertex_count}")]
    TooLarge {
        what: &'static str,
        vertex_count: usize,
        cap: usize,
    },

    #[error("surface (g={genus}, p={punctures}) rejected: {reason}")]
    Surface { genus: u32, punctures: u32, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
