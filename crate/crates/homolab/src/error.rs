use thiserror::Error;

/// Errors surfaced by complex construction, file parsing, and the
/// verification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structure error: {0}")]
    Structure(String),

    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unreachable: {0}")]
    Unreachable(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub fn parse(locus: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            locus: locus.into(),
            message: msg.into(),
        }
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
