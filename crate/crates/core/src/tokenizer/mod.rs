//! Counting of letters, words, sentences and syllables by walking the
//! codepoint vector one position at a time.

pub mod syllables;

use alloc::vec::Vec;

use crate::lexicon::{core_range, Lexicon};
use crate::scan::{counts_as_character, is_letter, is_sentence_mark, is_separator, Scan};

pub use syllables::count_syllables_in;

/// Errors raised while analysing a document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum TextError {
    /// The text holds no letter, so no index can be computed.
    #[error("no analyzable content: the text contains no letters")]
    EmptyText,
}

/// Counted variables of one document and their ratios.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TextStats {
    /// Letters plus hyphens.
    pub letters: usize,
    /// Words, after the degenerate-input rule.
    pub words: usize,
    /// Sentences, after the degenerate-input rule.
    pub sentences: usize,
    /// Heuristic syllable count of the whole text.
    pub syllables: usize,
    /// Words absent from the frequency bank.
    pub complex_words: usize,
    /// Words with three or more syllables (the original Gunning criterion).
    pub polysyllabic_words: usize,
    /// `letters / words`.
    pub letters_per_word: f64,
    /// `syllables / words`.
    pub syllables_per_word: f64,
    /// `words / sentences`.
    pub words_per_sentence: f64,
    /// `sentences / words`.
    pub sentences_per_word: f64,
    /// `complex_words / words`.
    pub complex_word_ratio: f64,
    /// `polysyllabic_words / words`.
    pub polysyllabic_ratio: f64,
}

impl TextStats {
    /// Builds stats from raw counts, applying the degenerate-input rule
    /// (zero words or zero sentences become one) before taking ratios.
    pub fn from_counts(
        letters: usize,
        words: usize,
        sentences: usize,
        syllables: usize,
        complex_words: usize,
        polysyllabic_words: usize,
    ) -> Self {
        let words = words.max(1);
        let sentences = sentences.max(1);
        let w = words as f64;
        Self {
            letters,
            words,
            sentences,
            syllables,
            complex_words,
            polysyllabic_words,
            letters_per_word: letters as f64 / w,
            syllables_per_word: syllables as f64 / w,
            words_per_sentence: w / sentences as f64,
            sentences_per_word: sentences as f64 / w,
            complex_word_ratio: complex_words as f64 / w,
            polysyllabic_ratio: polysyllabic_words as f64 / w,
        }
    }
}

/// `[start, end)` codepoint range of one word as delimited by the word counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordSpan {
    /// First codepoint.
    pub start: usize,
    /// One past the last codepoint.
    pub end: usize,
}

/// `[start, end)` codepoint range of one sentence, terminating marks included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentenceSpan {
    /// First non-separator codepoint.
    pub start: usize,
    /// One past the last terminating mark (or past the last non-separator
    /// for a trailing unterminated sentence).
    pub end: usize,
    /// `false` for trailing text that has no terminating mark.
    pub terminated: bool,
}

/// Positions holding a letter or a hyphen.
pub fn count_letters(scan: &Scan) -> usize {
    scan.as_slice()
        .iter()
        .filter(|&&c| counts_as_character(c))
        .count()
}

/// Increments at each separator whose predecessor exists and is neither a
/// separator nor a hyphen, and once more when the text ends on a
/// non-separator.
pub fn count_words(scan: &Scan) -> usize {
    let text = scan.as_slice();
    let n = text.len();
    let mut words = 0;
    for k in 0..n {
        if is_separator(text[k]) {
            if k > 0 && !is_separator(text[k - 1]) && text[k - 1] != '-' {
                words += 1;
            }
        } else if k + 1 == n {
            words += 1;
        }
    }
    words
}

/// Increments at each terminating mark whose predecessor is not a mark.
pub fn count_sentences(scan: &Scan) -> usize {
    let text = scan.as_slice();
    (0..text.len())
        .filter(|&k| is_sentence_mark(text[k]) && (k == 0 || !is_sentence_mark(text[k - 1])))
        .count()
}

/// Heuristic syllable count over the whole scan.
pub fn count_syllables(scan: &Scan) -> usize {
    count_syllables_in(scan.as_slice())
}

/// Word ranges consistent with [`count_words`]: runs of non-separators, where
/// a run ending in a hyphen continues into the next run.
pub fn word_spans(scan: &Scan) -> Vec<WordSpan> {
    let text = scan.as_slice();
    let n = text.len();
    let mut spans = Vec::new();
    let mut pending: Option<usize> = None;
    let mut k = 0;
    while k < n {
        if is_separator(text[k]) {
            k += 1;
            continue;
        }
        let run_start = k;
        while k < n && !is_separator(text[k]) {
            k += 1;
        }
        let start = *pending.get_or_insert(run_start);
        if k == n || text[k - 1] != '-' {
            spans.push(WordSpan { start, end: k });
            pending = None;
        }
    }
    spans
}

/// Sentence ranges. A sentence runs from its first non-separator to the end
/// of its run of terminating marks; trailing text without a mark forms a
/// final unterminated sentence.
pub fn sentence_spans(scan: &Scan) -> Vec<SentenceSpan> {
    let text = scan.as_slice();
    let n = text.len();
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    let mut last_visible = 0;
    let mut k = 0;
    while k < n {
        let c = text[k];
        if !is_separator(c) {
            start.get_or_insert(k);
            last_visible = k + 1;
        }
        if is_sentence_mark(c) {
            while k + 1 < n && is_sentence_mark(text[k + 1]) {
                k += 1;
            }
            spans.push(SentenceSpan {
                start: start.take().unwrap_or(k),
                end: k + 1,
                terminated: true,
            });
        }
        k += 1;
    }
    if let Some(start) = start {
        spans.push(SentenceSpan {
            start,
            end: last_visible,
            terminated: false,
        });
    }
    spans
}

/// Full analysis of `text` against `lexicon`.
pub fn analyze_text(text: &str, lexicon: &Lexicon) -> Result<TextStats, TextError> {
    analyze_scan(&Scan::new(text), lexicon)
}

/// [`analyze_text`] over an existing scan.
pub fn analyze_scan(scan: &Scan, lexicon: &Lexicon) -> Result<TextStats, TextError> {
    let text = scan.as_slice();
    if !text.iter().any(|&c| is_letter(c)) {
        return Err(TextError::EmptyText);
    }
    let mut complex = 0;
    let mut polysyllabic = 0;
    for span in word_spans(scan) {
        let word = &text[span.start..span.end];
        if count_syllables_in(word) >= 3 {
            polysyllabic += 1;
        }
        if let Some((s, e)) = core_range(word) {
            if lexicon.is_complex_chars(&word[s..e]) {
                complex += 1;
            }
        }
    }
    Ok(TextStats::from_counts(
        count_letters(scan),
        count_words(scan),
        count_sentences(scan),
        count_syllables(scan),
        complex,
        polysyllabic,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    fn scan(s: &str) -> Scan {
        Scan::new(s)
    }

    #[test]
    fn letters() {
        assert_eq!(count_letters(&scan("")), 0);
        assert_eq!(count_letters(&scan("pau-brasil")), 10);
        assert_eq!(count_letters(&scan("Este relatório apresenta")), 22);
        assert_eq!(count_letters(&scan("2.013 ok!")), 2);
    }

    #[test]
    fn words() {
        assert_eq!(count_words(&scan("")), 0);
        assert_eq!(count_words(&scan("O mundo é tudo o que ocorre.")), 7);
        assert_eq!(count_words(&scan("a\nb\nc")), 3);
        assert_eq!(count_words(&scan("guarda-chuva")), 1);
        assert_eq!(count_words(&scan("a b")), 2);
        assert_eq!(count_words(&scan("  a   b  \n\n")), 2);
        assert_eq!(count_words(&scan("pau- brasil")), 1);
        assert_eq!(count_words(&scan("a\tb\r\nc")), 3);
    }

    #[test]
    fn sentences() {
        assert_eq!(count_sentences(&scan("Sim! Não? Talvez; fim.")), 4);
        assert_eq!(count_sentences(&scan("Fim...")), 1);
        assert_eq!(count_sentences(&scan("")), 0);
        assert_eq!(count_sentences(&scan("Fim… e mais.")), 2);
        assert_eq!(count_sentences(&scan("2.013")), 1);
    }

    #[test]
    fn syllables() {
        assert_eq!(count_syllables(&scan("texto")), 2);
        assert_eq!(count_syllables(&scan("Oi.")), 2);
    }

    #[test]
    fn word_spans_match_counter() {
        for text in [
            "",
            "a",
            "a- ",
            "a-",
            "- -",
            "pau- brasil e",
            " x  y\n",
            "um-\n dois -três",
        ] {
            assert_eq!(
                word_spans(&scan(text)).len(),
                count_words(&scan(text)),
                "{text:?}"
            );
        }
        let s = scan("pau- brasil e");
        assert_eq!(
            word_spans(&s),
            [
                WordSpan { start: 0, end: 11 },
                WordSpan { start: 12, end: 13 }
            ]
        );
    }

    #[test]
    fn sentence_spans_cover_marks() {
        let s = scan("  Sim!! Não? resto");
        let spans = sentence_spans(&s);
        assert_eq!(spans.len(), 3);
        assert_eq!(s.slice(spans[0].start, spans[0].end), "Sim!!");
        assert_eq!(s.slice(spans[1].start, spans[1].end), "Não?");
        assert_eq!(s.slice(spans[2].start, spans[2].end), "resto");
        assert!(!spans[2].terminated);
        let terminated = spans.iter().filter(|s| s.terminated).count();
        assert_eq!(terminated, count_sentences(&s));
    }

    #[test]
    fn analyze_small() {
        let lex = Lexicon::builtin();
        let stats = analyze_text("Oi.", &lex).unwrap();
        assert_eq!(
            (stats.words, stats.sentences, stats.syllables, stats.letters),
            (1, 1, 2, 2)
        );
        assert_eq!(analyze_text("", &lex), Err(TextError::EmptyText));
        assert_eq!(analyze_text("123 ... -", &lex), Err(TextError::EmptyText));
    }

    #[test]
    fn degenerate_rule() {
        let lex = Lexicon::builtin();
        let stats = analyze_text("palavra", &lex).unwrap();
        assert_eq!((stats.words, stats.sentences), (1, 1));
        let stats = analyze_text("a- ", &lex).unwrap();
        assert_eq!(stats.words, 1);
        assert!(stats.letters_per_word.is_finite());
    }

    #[test]
    fn complex_words_use_bank() {
        let lex = Lexicon::builtin();
        let stats = analyze_text("De heterozigoto.", &lex).unwrap();
        assert_eq!(stats.complex_words, 1);
        assert_eq!(stats.polysyllabic_words, 1);
        // Tokens without letters are never complex.
        let stats = analyze_text("2.013 de", &lex).unwrap();
        assert_eq!(stats.complex_words, 0);
    }

    #[test]
    fn ratios_are_quotients() {
        let lex = Lexicon::builtin();
        let mut text = String::new();
        for _ in 0..5 {
            text.push_str("A lógica trata de cada possibilidade. ");
        }
        let s = analyze_text(&text, &lex).unwrap();
        let w = s.words as f64;
        assert!((s.letters_per_word - s.letters as f64 / w).abs() < 1e-9);
        assert!((s.syllables_per_word - s.syllables as f64 / w).abs() < 1e-9);
        assert!((s.words_per_sentence - w / s.sentences as f64).abs() < 1e-9);
        assert!((s.sentences_per_word * s.words_per_sentence - 1.0).abs() < 1e-9);
        assert!((s.complex_word_ratio - s.complex_words as f64 / w).abs() < 1e-9);
        assert!(s.complex_words <= s.words);
    }
}
