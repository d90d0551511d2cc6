//! The full analysis of one document.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::content::{
    cloud_frequencies, keyword_frequencies, suggestion_spans_scan, FrequencyEntry, Span,
};
use crate::lexicon::Lexicon;
use crate::metrics::{Formula, IndexSet, Profile};
use crate::scan::Scan;
use crate::tokenizer::{analyze_scan, TextError, TextStats};

/// Knobs for [`ReadabilityReport::build`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReportOptions {
    /// Words to count, matched whole-word and case-insensitively.
    pub keywords: Vec<String>,
    /// Cloud size.
    pub top_n: usize,
    /// Headline profile. The adapted indices are always computed;
    /// [`Profile::Original`] adds the original ones next to them.
    pub profile: Profile,
}

impl ReportOptions {
    /// Default cloud size.
    pub const DEFAULT_TOP_N: usize = 30;
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            keywords: Vec::new(),
            top_n: Self::DEFAULT_TOP_N,
            profile: Profile::AdaptedPt,
        }
    }
}

/// Stats, indices, highlights and frequencies of one text.
#[derive(Debug, Clone, PartialEq)]
pub struct ReadabilityReport {
    /// Counted variables.
    pub stats: TextStats,
    /// Indices under the adapted profile.
    pub indices: IndexSet,
    /// Indices under the original coefficients, when requested.
    pub original_indices: Option<IndexSet>,
    /// Highlights sorted by start offset.
    pub suggestions: Vec<Span>,
    /// One entry per requested keyword.
    pub keywords: Vec<FrequencyEntry>,
    /// Word-cloud entries.
    pub cloud: Vec<FrequencyEntry>,
    /// Remarks on the result, such as centigrade indices outside 0..100.
    pub notes: Vec<String>,
}

impl ReadabilityReport {
    /// Analyzes `text`.
    pub fn build(
        text: &str,
        lexicon: &Lexicon,
        options: &ReportOptions,
    ) -> Result<Self, TextError> {
        let scan = Scan::new(text);
        let stats = analyze_scan(&scan, lexicon)?;
        let indices = IndexSet::compute(&stats, Profile::AdaptedPt);
        let original_indices = match options.profile {
            Profile::Original => Some(IndexSet::compute(&stats, Profile::Original)),
            Profile::AdaptedPt => None,
        };
        let mut notes = Vec::new();
        for set in core::iter::once(&indices).chain(original_indices.as_ref()) {
            out_of_range_notes(set, &mut notes);
        }
        Ok(Self {
            stats,
            indices,
            original_indices,
            suggestions: suggestion_spans_scan(&scan, lexicon),
            keywords: keyword_frequencies(text, &options.keywords),
            cloud: cloud_frequencies(text, lexicon, options.top_n),
            notes,
        })
    }

    /// Indices of the given profile, if present.
    pub fn indices_for(&self, profile: Profile) -> Option<&IndexSet> {
        match profile {
            Profile::AdaptedPt => Some(&self.indices),
            Profile::Original => self.original_indices.as_ref(),
        }
    }
}

fn out_of_range_notes(set: &IndexSet, notes: &mut Vec<String>) {
    for formula in [Formula::Flesch, Formula::Gulpease] {
        let v = set.get(formula);
        if !(0.0..=100.0).contains(&v) {
            notes.push(format!(
                "{} ({}) is {:.1}, outside the 0-100 scale",
                formula.name(),
                set.profile,
                v
            ));
        }
    }
}
