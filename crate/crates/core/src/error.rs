use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A dictionary file could not be opened or read.
    #[error("cannot read dictionary {path}: {source}")]
    Config {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A dictionary row was malformed.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("number {value} is outside the supported range (must be below {bound})")]
    Range { value: String, bound: u64 },

    #[error("malformed number token {token:?}: {reason}")]
    Format { token: String, reason: &'static str },

    #[error("reload requires at least one dictionary path")]
    NothingToReload,
}
