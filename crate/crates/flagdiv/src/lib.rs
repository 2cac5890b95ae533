//! Command-line front end, JSON formats and verification sweeps for
//! `flagdiv-core`.

pub mod cli;
pub mod json;
pub mod suites;

pub use cli::{run, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] flagdiv_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}
