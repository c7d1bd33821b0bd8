use thiserror::Error;

/// Errors produced by graph construction, parsing and the polynomial algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph has {n} vertices, above the limit of {limit} for {algorithm}")]
    SizeBound {
        algorithm: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{0} requires a loop-free graph")]
    LoopsPresent(&'static str),

    #[error("{0} is undefined on the empty graph")]
    EmptyGraph(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
