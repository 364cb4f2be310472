use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A workload or graph exceeds a configured limit.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("self-loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    Index { vertex: usize, n: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The hypothesis of a theorem check is not met; this is not a violation.
    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("branch cap of {cap} greedy sequences exceeded")]
    BranchCap { cap: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
