use thiserror::Error;

/// Errors raised by graph construction and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: out-of-range vertex, self-loop, mismatched sizes.
    #[error("invalid input: {0}")]
    Input(String),
    /// Input is well formed but outside the domain of the operation
    /// (a disconnected graph where distances are needed, for instance).
    #[error("domain error: {0}")]
    Domain(String),
    /// A hypothesis of a construction does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The instance is larger than a search or enumeration supports.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    /// A configured resource cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Stems are undefined on path graphs.
    #[error("path graphs have no stems")]
    NoStem,
}

pub type Result<T> = std::result::Result<T, Error>;
