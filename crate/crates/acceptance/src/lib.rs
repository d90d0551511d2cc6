//! Shared helpers for the acceptance run.

use std::path::PathBuf;

/// Path of a file in the workspace `fixtures/` directory.
pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}
