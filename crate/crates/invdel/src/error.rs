use std::io;
use std::path::PathBuf;

use crate::genomes::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}:{}", path.display(), source)]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },

    #[error("cannot read {}: {source}", path.display())]
    Input {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("no genome named `{0}`")]
    UnknownGenome(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] invdel_core::Error),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Verification(String),
}

impl Error {
    /// 2 for problems with what the user supplied, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. }
            | Error::Input { .. }
            | Error::UnknownGenome(_)
            | Error::Usage(_) => 2,
            Error::Core(invdel_core::Error::CacheIntegrity(_)) => 1,
            Error::Core(_) => 2,
            Error::Io { .. } | Error::Verification(_) => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
