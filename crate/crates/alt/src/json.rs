//! Wire format of the analysis report.
//!
//! Indices carry one decimal, ratios three, `finalDisplay` is an integer.
//! Field order is fixed by the structs below, so output is deterministic.

use alt_core::{FrequencyEntry, IndexSet, ReadabilityReport, Span, TextStats};
use serde::Serialize;

/// Version of the JSON layout.
pub const SCHEMA: u32 = 1;

/// Rounds to `digits` decimals, folding `-0.0` into `0.0`.
pub fn round_to(x: f64, digits: i32) -> f64 {
    let p = 10f64.powi(digits);
    let r = (x * p).round() / p;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn index(x: f64) -> f64 {
    round_to(x, 1)
}

fn ratio(x: f64) -> f64 {
    round_to(x, 3)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct StatsDoc {
    letters: usize,
    words: usize,
    sentences: usize,
    syllables: usize,
    complex_words: usize,
    polysyllabic_words: usize,
    letters_per_word: f64,
    syllables_per_word: f64,
    words_per_sentence: f64,
    sentences_per_word: f64,
    complex_word_ratio: f64,
    polysyllabic_ratio: f64,
}

impl From<&TextStats> for StatsDoc {
    fn from(s: &TextStats) -> Self {
        Self {
            letters: s.letters,
            words: s.words,
            sentences: s.sentences,
            syllables: s.syllables,
            complex_words: s.complex_words,
            polysyllabic_words: s.polysyllabic_words,
            letters_per_word: ratio(s.letters_per_word),
            syllables_per_word: ratio(s.syllables_per_word),
            words_per_sentence: ratio(s.words_per_sentence),
            sentences_per_word: ratio(s.sentences_per_word),
            complex_word_ratio: ratio(s.complex_word_ratio),
            polysyllabic_ratio: ratio(s.polysyllabic_ratio),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IndicesDoc {
    profile: &'static str,
    flesch: f64,
    gulpease: f64,
    flesch_kincaid: f64,
    gunning_fog: f64,
    ari: f64,
    coleman_liau: f64,
    final_raw: f64,
    final_display: i64,
    band: &'static str,
}

impl From<&IndexSet> for IndicesDoc {
    fn from(i: &IndexSet) -> Self {
        Self {
            profile: i.profile.id(),
            flesch: index(i.flesch),
            gulpease: index(i.gulpease),
            flesch_kincaid: index(i.flesch_kincaid),
            gunning_fog: index(i.gunning_fog),
            ari: index(i.ari),
            coleman_liau: index(i.coleman_liau),
            final_raw: index(i.final_raw),
            final_display: i.final_display,
            band: i.band.label(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpanDoc {
    start_codepoint: usize,
    end_codepoint: usize,
    kind: &'static str,
}

impl From<&Span> for SpanDoc {
    fn from(s: &Span) -> Self {
        Self {
            start_codepoint: s.start,
            end_codepoint: s.end,
            kind: s.kind.id(),
        }
    }
}

/// One serialized frequency entry.
#[derive(Serialize)]
pub struct FrequencyDoc<'a> {
    token: &'a str,
    absolute: usize,
    relative: f64,
}

impl<'a> From<&'a FrequencyEntry> for FrequencyDoc<'a> {
    fn from(e: &'a FrequencyEntry) -> Self {
        Self {
            token: &e.token,
            absolute: e.absolute,
            relative: ratio(e.relative),
        }
    }
}

/// Serializes a list of frequency entries.
pub fn frequencies(entries: &[FrequencyEntry]) -> Vec<FrequencyDoc<'_>> {
    entries.iter().map(FrequencyDoc::from).collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportDoc<'a> {
    schema: u32,
    stats: StatsDoc,
    indices: IndicesDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    original_indices: Option<IndicesDoc>,
    suggestions: Vec<SpanDoc>,
    keywords: Vec<FrequencyDoc<'a>>,
    cloud: Vec<FrequencyDoc<'a>>,
    notes: &'a [String],
}

/// The report as pretty-printed JSON. CLI and HTTP both emit exactly this.
pub fn report_to_string(report: &ReadabilityReport) -> String {
    let doc = ReportDoc {
        schema: SCHEMA,
        stats: (&report.stats).into(),
        indices: (&report.indices).into(),
        original_indices: report.original_indices.as_ref().map(Into::into),
        suggestions: report.suggestions.iter().map(Into::into).collect(),
        keywords: frequencies(&report.keywords),
        cloud: frequencies(&report.cloud),
        notes: &report.notes,
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

/// Cloud output of `alt cloud`.
pub fn cloud_to_string(entries: &[FrequencyEntry]) -> String {
    #[derive(Serialize)]
    struct CloudDoc<'a> {
        schema: u32,
        cloud: Vec<FrequencyDoc<'a>>,
    }
    serde_json::to_string_pretty(&CloudDoc {
        schema: SCHEMA,
        cloud: frequencies(entries),
    })
    .expect("cloud serializes")
}
