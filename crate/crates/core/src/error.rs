use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at position {pos}: {msg}")]
    ParseAt { pos: usize, msg: String },
    #[error("non-canonical rational function: {0}")]
    NonCanonical(String),
    #[error("{0}")]
    Usage(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("linear system is underdetermined: rank {rank} of {needed}")]
    Underdetermined { rank: usize, needed: usize },
    #[error("inconsistent relations: {0}")]
    Inconsistent(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::ParseAt { .. } | Error::Usage(_) | Error::Unsupported(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
