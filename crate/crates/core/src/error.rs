use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally invalid input: self-loops, out-of-range indices,
    /// colorings that do not cover the graph, and similar.
    #[error("invalid input: {0}")]
    Validation(String),

    /// An operation that requires a connected graph received a
    /// disconnected one.
    #[error("graph is not connected")]
    Disconnected,

    /// A configured exhaustive-search cap would be exceeded.
    #[error("{what} cap exceeded: got {actual}, limit is {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
