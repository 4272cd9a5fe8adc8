//! IO companion to `qvar-core`: figure sweeps with deterministic CSV output,
//! the matrix/state text formats, CLI argument parsing helpers, and the
//! fixed-format renderers that keep standard output byte-stable.

pub mod formats;
pub mod render;
pub mod sweep;

use std::io;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] qvar_core::Error),
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Self::Parse(msg.into())
    }
}
