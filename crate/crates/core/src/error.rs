use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A size guard was exceeded. `guard` names the limit that tripped.
    #[error("guard `{guard}` exceeded: limit {limit}, got {actual}")]
    Guard { guard: &'static str, limit: usize, actual: usize },

    #[error("arity mismatch: expected {expected}, got {actual}")]
    Arity { expected: usize, actual: usize },

    #[error("value {value} is not in the carrier of semiring `{semiring}`")]
    Carrier { semiring: String, value: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("program is not in a dualizable standard form: {0}")]
    NonStandardForm(String),

    /// An internal consistency check failed; this always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
