//! Regression results behind the adapted coefficients, as published.
//!
//! These are reference values only. The 100-text sample they were fitted on
//! is not available, so they cannot be recomputed; the adapted
//! [`Profile`](crate::Profile) uses their rounded forms.

use crate::metrics::{Formula, Variable};

/// One published coefficient row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientRow {
    /// Variable multiplied by the coefficient, `None` for the intercept.
    pub variable: Option<Variable>,
    /// Fitted value.
    pub value: f64,
    /// Standard error.
    pub std_error: f64,
    /// p-value.
    pub p_value: f64,
}

/// One published fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedFit {
    /// Formula the fit calibrates.
    pub formula: Formula,
    /// Coefficient of determination.
    pub r2: f64,
    /// Intercept, then the two slopes in the published row order.
    pub rows: [CoefficientRow; 3],
}

const fn row(
    variable: Option<Variable>,
    value: f64,
    std_error: f64,
    p_value: f64,
) -> CoefficientRow {
    CoefficientRow {
        variable,
        value,
        std_error,
        p_value,
    }
}

use Variable::*;

/// Flesch reading ease.
pub const FLESCH: PublishedFit = PublishedFit {
    formula: Formula::Flesch,
    r2: 0.890742,
    rows: [
        row(None, 226.614882, 8.744455, 0.0),
        row(Some(WordsPerSentence), -1.036134, 0.0930814, 0.0),
        row(Some(SyllablesPerWord), -72.451284, 4.336399, 0.0),
    ],
};

/// Gunning fog. The intercept is not significant and is dropped in the
/// adapted formula.
pub const GUNNING_FOG: PublishedFit = PublishedFit {
    formula: Formula::GunningFog,
    r2: 0.77333,
    rows: [
        row(None, 1.00156, 1.28036, 0.43599),
        row(Some(WordsPerSentence), 0.49261, 0.02764, 0.0),
        row(Some(ComplexWordRatio), 18.66057, 5.6943, 0.00146),
    ],
};

/// ARI.
pub const ARI: PublishedFit = PublishedFit {
    formula: Formula::Ari,
    r2: 0.93696,
    rows: [
        row(None, -20.26065, 1.67994, 0.0),
        row(Some(LettersPerWord), 4.57058, 0.36508, 0.0),
        row(Some(WordsPerSentence), 0.43664, 0.01834, 0.0),
    ],
};

/// Flesch-Kincaid.
pub const FLESCH_KINCAID: PublishedFit = PublishedFit {
    formula: Formula::FleschKincaid,
    r2: 0.92273,
    rows: [
        row(None, -18.11589, 1.6077, 0.0),
        row(Some(WordsPerSentence), 0.36001, 0.01712, 0.0),
        row(Some(SyllablesPerWord), 10.35177, 0.79701, 0.0),
    ],
};

/// Coleman-Liau. The published table labels the last row syllables/word;
/// it is stored against sentences/word, the variable the adopted formula
/// multiplies.
pub const COLEMAN_LIAU: PublishedFit = PublishedFit {
    formula: Formula::ColemanLiau,
    r2: 0.89221,
    rows: [
        row(None, -13.66302, 1.61422, 0.0),
        row(Some(LettersPerWord), 5.39801, 0.27242, 0.0),
        row(Some(SentencesPerWord), -20.57984, 6.67523, 0.0),
    ],
};

/// All five fits.
pub const ALL: [PublishedFit; 5] = [FLESCH, GUNNING_FOG, ARI, FLESCH_KINCAID, COLEMAN_LIAU];
