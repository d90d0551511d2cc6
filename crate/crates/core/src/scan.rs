//! Codepoint view of a document and the character classes the counters use.

use alloc::string::String;
use alloc::vec::Vec;

/// A document stored as an ordered sequence of Unicode scalar values.
///
/// All offsets handed out by this crate (word spans, suggestion spans) are
/// indices into this sequence, never byte offsets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scan {
    chars: Vec<char>,
}

impl Scan {
    /// Builds the scan of `text`.
    pub fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
        }
    }

    /// Number of codepoints.
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    /// `true` for the empty document.
    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Codepoint at `k`, if in range.
    pub fn get(&self, k: usize) -> Option<char> {
        self.chars.get(k).copied()
    }

    /// The underlying codepoints.
    pub fn as_slice(&self) -> &[char] {
        &self.chars
    }

    /// Collects `[start, end)` back into a string. Out-of-range bounds are clamped.
    pub fn slice(&self, start: usize, end: usize) -> String {
        let end = end.min(self.chars.len());
        let start = start.min(end);
        self.chars[start..end].iter().collect()
    }
}

impl From<&str> for Scan {
    fn from(text: &str) -> Self {
        Self::new(text)
    }
}

/// Latin-script blocks. Alphabetic codepoints outside these are not letters
/// for counting purposes.
fn is_latin_block(c: char) -> bool {
    matches!(c as u32,
        0x0041..=0x005A
        | 0x0061..=0x007A
        | 0x00AA
        | 0x00BA
        | 0x00C0..=0x00D6
        | 0x00D8..=0x00F6
        | 0x00F8..=0x024F
        | 0x0250..=0x02AF
        | 0x1D00..=0x1D7F
        | 0x1E00..=0x1EFF
        | 0x2C60..=0x2C7F
        | 0xA720..=0xA7FF
        | 0xAB30..=0xAB6F
        | 0xFB00..=0xFB06
        | 0xFF21..=0xFF3A
        | 0xFF41..=0xFF5A)
}

/// A Latin-script alphabetic codepoint, any case, accented or not.
pub fn is_letter(c: char) -> bool {
    c.is_alphabetic() && is_latin_block(c)
}

/// What the character counter increments on: a letter or the ASCII hyphen.
pub fn counts_as_character(c: char) -> bool {
    c == '-' || is_letter(c)
}

/// Word separator. Spaces and line breaks, generalised to every Unicode
/// whitespace codepoint so tabs and CRLF line endings behave like spaces.
pub fn is_separator(c: char) -> bool {
    c.is_whitespace()
}

/// Sentence-terminating marks. The single-codepoint ellipsis behaves like `.`.
pub fn is_sentence_mark(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | ';' | '\u{2026}')
}

/// Single-codepoint lowercase; characters whose lowercase expands to several
/// codepoints are returned unchanged.
pub fn fold_case(c: char) -> char {
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}
