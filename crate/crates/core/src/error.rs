use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violates the mathematical preconditions of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is well-formed but exceeds a configured enumeration bound.
    #[error("size limit exceeded: {what} is {requested}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),

    /// A result that the mathematics guarantees (e.g. integrality) failed to hold.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn size_limit(what: &'static str, requested: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::SizeLimit {
            what,
            requested: requested.into(),
            limit: limit.into(),
        }
    }
}
