//! Support code for the `ggp` command-line tool: JSON and LaTeX/text
//! renderings, the on-disk table cache and the construction benchmark.

pub mod bench;
pub mod format;
pub mod json;
pub mod table;

use std::io;

use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const POLE: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Pole(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Pole(_) => exit::POLE,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl From<ggp_core::Error> for CliError {
    fn from(e: ggp_core::Error) -> Self {
        use ggp_core::Error::*;
        match e {
            Pole { .. } | PoleInTerm { .. } | Resonance { .. } => CliError::Pole(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
