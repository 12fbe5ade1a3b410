//! Command-line front end for `ecclab`.
//!
//! Exit codes: 0 on success, 1 when a check finds a failure, 2 on usage or
//! input errors.

pub mod checks;
pub mod commands;
pub mod document;

use std::fmt;

pub use checks::{run_suite, CheckOptions, CheckReport, Suite, Witness};
pub use commands::{run, Cli};
pub use document::GraphDocument;

/// Anything that ends the program with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ecclab::Error> for CliError {
    fn from(e: ecclab::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
