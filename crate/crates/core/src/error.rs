use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported specialization: {0}")]
    Unsupported(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
