use thiserror::Error;

/// Errors raised while constructing graphs and instances or feeding
/// malformed joins to the internal routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("target function has {got} entries, expected {expected}")]
    DeltaLength { expected: usize, got: usize },
    #[error("parity target for vertex {vertex} must be 0 or 1, got {value}")]
    InvalidParity { vertex: usize, value: u8 },
    #[error("unsupported operation set `{0}` (expected `ea` or `ea+ed`)")]
    UnsupportedOperationSet(String),
    #[error("edge set is not a join for the requested target")]
    NotAJoin,
    #[error("arc ({0}, {1}) is not available in the operation multigraph")]
    ArcNotInOperationGraph(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
