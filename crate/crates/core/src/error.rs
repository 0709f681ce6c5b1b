use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} of {requested} exceeds the supported limit of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("ill-typed word at letter {position}: expected source size {expected}, found {found}")]
    IllTypedWord {
        position: usize,
        expected: usize,
        found: usize,
    },

    #[error("no inversion/deletion path: {0}")]
    NoPath(String),

    #[error("cache integrity: {0}")]
    CacheIntegrity(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
