use thiserror::Error;

/// Errors produced by the library. Every variant carries enough context to
/// print a useful message from the CLI without further lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sequence: element {value} at position {position} is not a positive integer")]
    InvalidSequence { position: usize, value: u64 },

    #[error("operation requires a nonempty sequence")]
    EmptySequence,

    #[error("invalid reflection {lo}..{hi} for a sequence of length {len}")]
    InvalidReflection { lo: usize, hi: usize, len: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("insufficient precision ({bits} bits) to certify {what}")]
    Precision { bits: u32, what: &'static str },

    #[error("enumeration request rejected: {0}")]
    Enumeration(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
