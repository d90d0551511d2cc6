//! Reading documents and lexicon files.

use std::io::Read;
use std::path::{Path, PathBuf};

use alt_core::Lexicon;

use crate::AppError;

const BOM: &[u8] = b"\xEF\xBB\xBF";

/// Decodes UTF-8, dropping a leading byte-order mark.
pub fn decode(bytes: &[u8]) -> Result<String, AppError> {
    let bytes = bytes.strip_prefix(BOM).unwrap_or(bytes);
    String::from_utf8(bytes.to_vec()).map_err(|e| {
        AppError::Format(format!(
            "input is not valid UTF-8 (byte offset {})",
            e.utf8_error().valid_up_to()
        ))
    })
}

/// Reads and decodes a file, or standard input for `None` and `-`.
pub fn read_text(path: Option<&Path>) -> Result<String, AppError> {
    match path {
        Some(p) if p != Path::new("-") => {
            let bytes = std::fs::read(p).map_err(|e| AppError::io(p, e))?;
            decode(&bytes).map_err(|e| AppError::Format(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut bytes = Vec::new();
            std::io::stdin()
                .read_to_end(&mut bytes)
                .map_err(|e| AppError::io("-", e))?;
            decode(&bytes)
        }
    }
}

/// Optional overrides for the shipped bank and stopword list.
#[derive(Debug, Clone, Default)]
pub struct LexiconPaths {
    /// Frequency bank, one token per line.
    pub wordbank: Option<PathBuf>,
    /// Stopword list.
    pub stopwords: Option<PathBuf>,
}

/// Builds the lexicon, reading any overridden file.
pub fn load_lexicon(paths: &LexiconPaths) -> Result<Lexicon, AppError> {
    let bank = match &paths.wordbank {
        Some(p) => read_text(Some(p))?,
        None => Lexicon::builtin_bank_source().to_owned(),
    };
    let stopwords = match &paths.stopwords {
        Some(p) => read_text(Some(p))?,
        None => Lexicon::builtin_stopwords_source().to_owned(),
    };
    let name = paths
        .wordbank
        .as_ref()
        .map_or_else(|| "builtin".to_owned(), |p| p.display().to_string());
    Ok(Lexicon::from_sources(&bank, &stopwords, name))
}
