//! Command-line front end and JSON formats for `catalania-core`.

pub mod cli;
pub mod config;
pub mod report;
pub mod series_file;

/// Environment variable overriding [`catalania_core::DEFAULT_MAX_STRUCTS`].
pub const MAX_STRUCTS_ENV: &str = "CATALANIA_MAX_STRUCTS";

/// Anything that stops a command before it can reach a verdict. Exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] catalania_core::Error),
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// `true` on success or all-pass, `false` on a mathematical mismatch.
    pub ok: bool,
}

impl Output {
    fn new(stdout: String, ok: bool) -> Self {
        Output { stdout, ok }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }
}
