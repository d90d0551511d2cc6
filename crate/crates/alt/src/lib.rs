//! Std front end for `alt-core`: file loading, JSON and text rendering,
//! the `alt` command line and the HTTP service.

pub mod cli;
pub mod input;
pub mod json;
pub mod server;
pub mod tables;
pub mod text;

use std::path::PathBuf;

use alt_core::{CalibrationError, TextError};

/// Failures surfaced to the user.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    /// A file or stream could not be read or written.
    #[error("{path}: {source}")]
    Io {
        /// Offending path, `-` for standard streams.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// Malformed input such as invalid UTF-8 or a bad CSV row.
    #[error("{0}")]
    Format(String),
    /// The document has nothing to measure.
    #[error(transparent)]
    Text(#[from] TextError),
    /// Fitting or comparison failed.
    #[error(transparent)]
    Calibration(#[from] CalibrationError),
}

impl AppError {
    /// Process exit code: 2 for empty text, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Text(TextError::EmptyText) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io {
            path: path.into(),
            source,
        }
    }
}
