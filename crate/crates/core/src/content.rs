//! Keyword counts, word-cloud frequencies and revision highlights.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lexicon::{core_range, normalize_word, Lexicon};
use crate::scan::Scan;
use crate::tokenizer::{sentence_spans, word_spans};

/// Sentences with at least this many words are flagged as long.
pub const LONG_SENTENCE_MIN: usize = 30;
/// Sentences with more than this many words are flagged as very long.
pub const LONG_SENTENCE_MAX: usize = 45;

/// Absolute and relative frequency of one normalized token.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyEntry {
    /// Normalized token.
    pub token: String,
    /// Occurrences.
    pub absolute: usize,
    /// `absolute` over the number of lexical tokens in the text.
    pub relative: f64,
}

/// What a highlighted range marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpanKind {
    /// Sentence of 30 to 45 words.
    LongSentence,
    /// Sentence of more than 45 words.
    VeryLongSentence,
    /// Word missing from the frequency bank.
    ComplexWord,
}

impl SpanKind {
    /// Identifier used in serialized output.
    pub fn id(self) -> &'static str {
        match self {
            SpanKind::LongSentence => "longSentence",
            SpanKind::VeryLongSentence => "veryLongSentence",
            SpanKind::ComplexWord => "complexWord",
        }
    }
}

/// `[start, end)` codepoint range with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    /// First codepoint.
    pub start: usize,
    /// One past the last codepoint.
    pub end: usize,
    /// Highlight kind.
    pub kind: SpanKind,
}

/// Normalized tokens in text order. Words with no letters are skipped.
pub fn tokens(scan: &Scan) -> Vec<String> {
    let text = scan.as_slice();
    word_spans(scan)
        .into_iter()
        .filter_map(|span| {
            let word = &text[span.start..span.end];
            let (s, e) = core_range(word)?;
            Some(word[s..e].iter().collect::<String>().to_lowercase())
        })
        .collect()
}

fn relative(absolute: usize, total: usize) -> f64 {
    if total == 0 {
        0.0
    } else {
        absolute as f64 / total as f64
    }
}

fn tally(tokens: &[String]) -> BTreeMap<&str, usize> {
    let mut counts = BTreeMap::new();
    for t in tokens {
        *counts.entry(t.as_str()).or_insert(0) += 1;
    }
    counts
}

/// Every distinct token with its frequency, in alphabetical order.
pub fn word_frequencies(text: &str) -> Vec<FrequencyEntry> {
    let tokens = tokens(&Scan::new(text));
    let total = tokens.len();
    tally(&tokens)
        .into_iter()
        .map(|(token, absolute)| FrequencyEntry {
            token: token.into(),
            absolute,
            relative: relative(absolute, total),
        })
        .collect()
}

/// Whole-word, case-insensitive counts of each keyword, in keyword order.
pub fn keyword_frequencies<S: AsRef<str>>(text: &str, keywords: &[S]) -> Vec<FrequencyEntry> {
    let tokens = tokens(&Scan::new(text));
    let total = tokens.len();
    let counts = tally(&tokens);
    keywords
        .iter()
        .map(|k| {
            let token = normalize_word(k.as_ref());
            let absolute = counts.get(token.as_str()).copied().unwrap_or(0);
            FrequencyEntry {
                relative: relative(absolute, total),
                token,
                absolute,
            }
        })
        .collect()
}

/// The `top_n` most frequent non-stopword tokens, count descending then
/// alphabetical.
pub fn cloud_frequencies(text: &str, lexicon: &Lexicon, top_n: usize) -> Vec<FrequencyEntry> {
    let tokens = tokens(&Scan::new(text));
    let total = tokens.len();
    let mut entries: Vec<FrequencyEntry> = tally(&tokens)
        .into_iter()
        .filter(|(token, _)| !lexicon.stopwords().contains(*token))
        .map(|(token, absolute)| FrequencyEntry {
            token: token.into(),
            absolute,
            relative: relative(absolute, total),
        })
        .collect();
    // the map is already alphabetical, so a stable sort keeps ties in order
    entries.sort_by_key(|e| core::cmp::Reverse(e.absolute));
    entries.truncate(top_n);
    entries
}

/// Long-sentence and complex-word highlights, sorted by start offset.
pub fn suggestion_spans(text: &str, lexicon: &Lexicon) -> Vec<Span> {
    suggestion_spans_scan(&Scan::new(text), lexicon)
}

/// [`suggestion_spans`] over an existing scan.
pub fn suggestion_spans_scan(scan: &Scan, lexicon: &Lexicon) -> Vec<Span> {
    let text = scan.as_slice();
    let words = word_spans(scan);
    let mut spans = Vec::new();

    for sentence in sentence_spans(scan) {
        let count = words
            .iter()
            .filter(|w| w.start >= sentence.start && w.start < sentence.end)
            .count();
        let kind = if count > LONG_SENTENCE_MAX {
            SpanKind::VeryLongSentence
        } else if count >= LONG_SENTENCE_MIN {
            SpanKind::LongSentence
        } else {
            continue;
        };
        spans.push(Span {
            start: sentence.start,
            end: sentence.end,
            kind,
        });
    }

    for w in &words {
        let word = &text[w.start..w.end];
        if let Some((s, e)) = core_range(word) {
            if lexicon.is_complex_chars(&word[s..e]) {
                spans.push(Span {
                    start: w.start + s,
                    end: w.start + e,
                    kind: SpanKind::ComplexWord,
                });
            }
        }
    }

    spans.sort();
    spans
}
