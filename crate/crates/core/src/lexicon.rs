//! Frequency word bank and stopword list.
//!
//! A word is *complex* when its normalized form is not among the first
//! [`BANK_SIZE`] entries of a rank-ordered frequency list. Stopwords are the
//! function words kept out of the word cloud.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::scan::is_letter;

/// Number of bank entries kept; everything past this rank is complex.
pub const BANK_SIZE: usize = 5000;

const BUILTIN_BANK: &str = include_str!("../../../data/wordbank-pt.txt");
const BUILTIN_STOPWORDS: &str = include_str!("../../../data/stopwords-pt.txt");

/// Range of `word` left after trimming non-letters from both ends, or `None`
/// when nothing is left.
pub fn core_range(word: &[char]) -> Option<(usize, usize)> {
    let start = word.iter().position(|&c| is_letter(c))?;
    let end = word.iter().rposition(|&c| is_letter(c))? + 1;
    Some((start, end))
}

/// Lowercases and strips leading/trailing non-letters. Internal hyphens,
/// apostrophes and accents stay.
pub fn normalize_word(word: &str) -> String {
    let chars: Vec<char> = word.chars().collect();
    match core_range(&chars) {
        Some((s, e)) => chars[s..e].iter().collect::<String>().to_lowercase(),
        None => String::new(),
    }
}

fn normalize_chars(word: &[char]) -> String {
    word.iter().collect::<String>().to_lowercase()
}

/// Parses a bank: one token per line, rank-ordered, optionally
/// `token<TAB>frequency`. Blank lines are skipped; the first
/// [`BANK_SIZE`] remaining lines are kept.
pub fn parse_word_bank(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|line| line.split('\t').next().unwrap_or("").trim())
        .filter(|token| !token.is_empty())
        .take(BANK_SIZE)
        .map(|token| token.to_lowercase())
        .collect()
}

/// Parses a stopword list: one entry per line, `#` starts a comment line.
///
/// Single-token entries are kept as they are. A multi-token entry such as
/// "uma vez que" contributes only those of its tokens that are also listed
/// alone somewhere in the file, so content words like "vez" survive. That
/// makes the result exactly the set of single-token entries.
pub fn parse_stopwords(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .filter(|entry| !entry.contains(char::is_whitespace))
        .map(normalize_word)
        .filter(|token| !token.is_empty())
        .collect()
}

/// Name and size of the loaded bank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceMeta {
    /// Free-form bank name (file path or "builtin").
    pub name: String,
    /// Distinct entries in the bank.
    pub entries: usize,
}

/// Common-word bank plus stopword set. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    common: BTreeSet<String>,
    stopwords: BTreeSet<String>,
    source: SourceMeta,
}

impl Lexicon {
    /// Builds a lexicon from already-parsed sets. Entries are normalized.
    pub fn new(
        common: impl IntoIterator<Item = String>,
        stopwords: impl IntoIterator<Item = String>,
        name: impl Into<String>,
    ) -> Self {
        let common: BTreeSet<String> = common
            .into_iter()
            .map(|w| w.trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        let stopwords = stopwords
            .into_iter()
            .map(|w| normalize_word(&w))
            .filter(|w| !w.is_empty())
            .collect();
        let source = SourceMeta {
            name: name.into(),
            entries: common.len(),
        };
        Self {
            common,
            stopwords,
            source,
        }
    }

    /// Parses bank and stopword file contents.
    pub fn from_sources(bank: &str, stopwords: &str, name: impl Into<String>) -> Self {
        Self::new(parse_word_bank(bank), parse_stopwords(stopwords), name)
    }

    /// The bank and stopword list shipped with the crate.
    pub fn builtin() -> Self {
        Self::from_sources(BUILTIN_BANK, BUILTIN_STOPWORDS, "builtin")
    }

    /// The shipped stopword list, for callers that only override the bank.
    pub fn builtin_stopwords_source() -> &'static str {
        BUILTIN_STOPWORDS
    }

    /// The shipped bank, for callers that only override the stopwords.
    pub fn builtin_bank_source() -> &'static str {
        BUILTIN_BANK
    }

    /// Replaces the bank, keeping the stopwords.
    pub fn with_bank(self, common: BTreeSet<String>, name: impl Into<String>) -> Self {
        Self::new(common, self.stopwords, name)
    }

    /// Replaces the stopwords, keeping the bank.
    pub fn with_stopwords(self, stopwords: BTreeSet<String>) -> Self {
        let name = self.source.name.clone();
        Self::new(self.common, stopwords, name)
    }

    /// Bank provenance.
    pub fn source(&self) -> &SourceMeta {
        &self.source
    }

    /// Number of distinct bank entries.
    pub fn bank_size(&self) -> usize {
        self.common.len()
    }

    /// The normalized bank.
    pub fn common_words(&self) -> &BTreeSet<String> {
        &self.common
    }

    /// The normalized stopword set.
    pub fn stopwords(&self) -> &BTreeSet<String> {
        &self.stopwords
    }

    /// `true` iff the normalized word is absent from the bank.
    /// A word with no letters normalizes to nothing and is never complex.
    pub fn is_complex(&self, word: &str) -> bool {
        let norm = normalize_word(word);
        !norm.is_empty() && !self.common.contains(&norm)
    }

    /// [`Lexicon::is_complex`] for an already-trimmed codepoint slice.
    pub(crate) fn is_complex_chars(&self, core: &[char]) -> bool {
        !core.is_empty() && !self.common.contains(&normalize_chars(core))
    }

    /// Membership in the stopword set after normalization. The empty token
    /// counts as a stopword so it is never displayed.
    pub fn is_stopword(&self, word: &str) -> bool {
        let norm = normalize_word(word);
        norm.is_empty() || self.stopwords.contains(&norm)
    }
}

impl Default for Lexicon {
    fn default() -> Self {
        Self::builtin()
    }
}

impl core::fmt::Display for SourceMeta {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} ({} entries)", self.name, self.entries)
    }
}
