use thiserror::Error;

/// Everything that can go wrong while building graphs, ideals or Betti tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("deleting the edge leaves an edgeless graph")]
    Edgeless,
    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeOutOfRange { index: usize, edges: usize },
    #[error("invalid size {value}: {reason}")]
    InvalidSize { value: usize, reason: &'static str },
    #[error("guard exceeded: {what} is {actual}, limit {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("ideals live in different variable contexts")]
    ContextMismatch,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("variable set is outside the context")]
    OutsideContext,
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("empty Betti table")]
    EmptyTable,
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Guard { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
