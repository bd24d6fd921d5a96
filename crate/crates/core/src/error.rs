use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments of an operation was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("integer overflow computing {0}")]
    Overflow(String),

    /// A bounds-table or f-table record failed validation.
    #[error("line {line}: {message}")]
    Record { line: usize, message: String },

    /// A stored witness does not reproduce its claimed value.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
