use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by set construction, finders and reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("value out of range: {0}")]
    Range(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("{what}: estimated size {estimate} exceeds budget {limit} (raise SQUARELAB_BUDGET)")]
    Budget {
        what: &'static str,
        estimate: u128,
        limit: u128,
    },

    #[error("mode error: {0}")]
    Mode(String),

    #[error("{}:{line}: {msg}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn budget(what: &'static str, estimate: u128, limit: u128) -> Self {
        Error::Budget {
            what,
            estimate,
            limit,
        }
    }
}
