use thiserror::Error;

/// Largest graph order accepted by the library.
pub const MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported limit of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair {0}-{1} is listed as both mandatory and optional")]
    Overlap(usize, usize),
    #[error("lower graph is not a subgraph of the upper graph (edge {0}-{1})")]
    NotNested(usize, usize),
    #[error("vertex count mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("a forbidden pair needs two distinct graphs, got `{0}` twice")]
    IdenticalPair(String),
    #[error("no closure rule is registered for family {0}")]
    UnregisteredFamily(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("input too large for exhaustive oracle: {0}")]
    OracleLimit(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            message: e.to_string(),
        }
    }
}
