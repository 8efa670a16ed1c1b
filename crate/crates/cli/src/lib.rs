//! Library side of the `palcomb` command: b-file handling, the census cache,
//! output formats and the subcommands themselves.

pub mod bfile;
pub mod cache;
pub mod commands;
pub mod output;
pub mod sequences;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] palcomb::Error),
    #[error("b-file line {line}: {message}")]
    BFile { line: usize, message: String },
    #[error("cache corrupted: {0}")]
    Cache(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
}
