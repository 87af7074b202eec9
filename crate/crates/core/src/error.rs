use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text did not match the comma-separated state format.
    #[error("parse error: {0}")]
    Parse(String),

    /// A state or argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An enumeration or state space is larger than the configured limit.
    #[error("{what} exceeds the configured bound ({requested} > {limit})")]
    BoundExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// An orbit did not repeat within its step bound. Every state space
    /// handled here is finite, so this indicates a configuration error.
    #[error("no repetition within {bound} steps")]
    StepBound { bound: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
