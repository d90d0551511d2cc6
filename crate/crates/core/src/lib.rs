//! Readability analysis for Portuguese text.
//!
//! The crate turns raw text into counted variables (letters, words,
//! sentences, syllables, complex words), evaluates the readability formulas
//! under either the original English coefficients or the Portuguese-adapted
//! ones, and ships the regression and comparison statistics used to
//! calibrate and evaluate those coefficients.
//!
//! Everything here is pure computation over borrowed input and works without
//! `std`; file loading, the CLI and the HTTP service live in the `alt` crate.
//!
//! ```
//! use alt_core::{analyze_text, IndexSet, Lexicon, Profile};
//!
//! let lexicon = Lexicon::builtin();
//! let stats = analyze_text("O mundo é tudo o que ocorre.", &lexicon).unwrap();
//! assert_eq!(stats.words, 7);
//! let indices = IndexSet::compute(&stats, Profile::AdaptedPt);
//! assert_eq!(indices.band.label(), "alta");
//! ```
#![no_std]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod calibration;
pub mod content;
pub mod lexicon;
pub mod metrics;
pub mod report;
pub mod scan;
pub mod tokenizer;

pub use calibration::{
    mean_diff_band, pearson, student_t_p_value, CalibrationError, CalibrationSample,
    ComparisonStats, RegressionFit,
};
pub use content::{FrequencyEntry, Span, SpanKind};
pub use lexicon::Lexicon;
pub use metrics::{Band, Formula, IndexSet, MetricError, Profile};
pub use report::{ReadabilityReport, ReportOptions};
pub use scan::Scan;
pub use tokenizer::{analyze_text, TextError, TextStats};
