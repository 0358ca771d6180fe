//! Std companion to `hopfq-core`: file formats, scene rendering, foliation
//! sampling, and the self-check suite behind the `hopfq` binary.

pub mod checks;
pub mod foliate;
pub mod formats;
pub mod scene;

use std::fmt;

/// Errors surfaced by the binary, split by exit code: validation problems
/// (bad input, bad flags, IO) exit with 1, a failed self-check run exits
/// with 2.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    CheckFailure,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "{msg}"),
            CliError::CheckFailure => write!(f, "one or more self-checks failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hopfq_core::Error> for CliError {
    fn from(e: hopfq_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Validation(format!("invalid JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("io error: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
