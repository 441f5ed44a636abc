use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("edge ({0}, {1}, {2}) appears more than once")]
    DuplicateEdgeTriple(String, String, String),
    #[error("no initial vertex given")]
    MissingInitial,
    #[error("operation requires a nonempty path set")]
    EmptyPathSet,
    #[error("path set has no {0}-fold interleaving factorization")]
    NotFactorizable(usize),
    #[error("block sets have different depths ({0} and {1})")]
    DepthMismatch(usize, usize),
    #[error("invalid block set: {0}")]
    InvalidBlockSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
