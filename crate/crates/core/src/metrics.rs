//! Readability formulas, the Flesch scale conversion, the final score and
//! its classification band.
//!
//! Every formula is a plane `c1 + c2 * x + c3 * y` over two ratio variables
//! of [`TextStats`]. A [`Profile`] selects the coefficient set: the original
//! English (Italian for Gulpease) coefficients or the Portuguese-adapted ones.

use core::fmt;
use core::str::FromStr;

use crate::tokenizer::TextStats;

/// A ratio variable a formula can depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    /// `words / sentences`
    WordsPerSentence,
    /// `syllables / words`
    SyllablesPerWord,
    /// `letters / words`
    LettersPerWord,
    /// `sentences / words`
    SentencesPerWord,
    /// `complex words / words`, bank criterion
    ComplexWordRatio,
    /// `words with 3+ syllables / words`
    PolysyllabicRatio,
}

impl Variable {
    /// Reads the variable off `stats`.
    pub fn value(self, stats: &TextStats) -> f64 {
        match self {
            Variable::WordsPerSentence => stats.words_per_sentence,
            Variable::SyllablesPerWord => stats.syllables_per_word,
            Variable::LettersPerWord => stats.letters_per_word,
            Variable::SentencesPerWord => stats.sentences_per_word,
            Variable::ComplexWordRatio => stats.complex_word_ratio,
            Variable::PolysyllabicRatio => stats.polysyllabic_ratio,
        }
    }
}

/// The six formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// Flesch reading ease (0-100 scale).
    Flesch,
    /// Gunning fog index (grade level).
    GunningFog,
    /// Automated readability index (grade level).
    Ari,
    /// Flesch-Kincaid grade level.
    FleschKincaid,
    /// Coleman-Liau index (grade level).
    ColemanLiau,
    /// Gulpease index (0-100 scale).
    Gulpease,
}

impl Formula {
    /// All formulas in display order.
    pub const ALL: [Formula; 6] = [
        Formula::Flesch,
        Formula::Gulpease,
        Formula::FleschKincaid,
        Formula::GunningFog,
        Formula::Ari,
        Formula::ColemanLiau,
    ];

    /// Short identifier used on the wire and in CSV files.
    pub fn id(self) -> &'static str {
        match self {
            Formula::Flesch => "flesch",
            Formula::GunningFog => "gf",
            Formula::Ari => "ari",
            Formula::FleschKincaid => "fk",
            Formula::ColemanLiau => "cl",
            Formula::Gulpease => "gulpease",
        }
    }

    /// Human-readable name.
    pub fn name(self) -> &'static str {
        match self {
            Formula::Flesch => "Flesch reading ease",
            Formula::GunningFog => "Gunning fog",
            Formula::Ari => "ARI",
            Formula::FleschKincaid => "Flesch-Kincaid",
            Formula::ColemanLiau => "Coleman-Liau",
            Formula::Gulpease => "Gulpease",
        }
    }

    /// Parses an identifier, case-insensitively; a few long forms are accepted.
    pub fn from_id(id: &str) -> Result<Self, MetricError> {
        let lower = id.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "flesch" | "fre" => Formula::Flesch,
            "gf" | "gunning" | "gunningfog" | "gunning-fog" => Formula::GunningFog,
            "ari" => Formula::Ari,
            "fk" | "flesch-kincaid" | "fleschkincaid" => Formula::FleschKincaid,
            "cl" | "coleman-liau" | "colemanliau" => Formula::ColemanLiau,
            "gulpease" => Formula::Gulpease,
            _ => return Err(MetricError::UnknownFormula),
        })
    }

    /// `true` for the formulas reported on the 0-100 scale.
    pub fn is_centigrade(self) -> bool {
        matches!(self, Formula::Flesch | Formula::Gulpease)
    }
}

impl FromStr for Formula {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::from_id(s)
    }
}

/// Metric errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    /// The formula identifier is not one of the six formulas.
    #[error("unknown formula identifier")]
    UnknownFormula,
    /// The profile identifier is neither `original` nor `adapted`.
    #[error("unknown profile identifier")]
    UnknownProfile,
}

/// Coefficients of one plane `c1 + c2 * x + c3 * y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    /// Intercept.
    pub c1: f64,
    /// Coefficient of `x`.
    pub c2: f64,
    /// First variable.
    pub x: Variable,
    /// Coefficient of `y`.
    pub c3: f64,
    /// Second variable.
    pub y: Variable,
}

impl Plane {
    const fn new(c1: f64, c2: f64, x: Variable, c3: f64, y: Variable) -> Self {
        Self { c1, c2, x, c3, y }
    }

    /// Evaluates the plane at explicit variable values.
    pub fn at(&self, x: f64, y: f64) -> f64 {
        self.c1 + self.c2 * x + self.c3 * y
    }

    /// Evaluates the plane on `stats`.
    pub fn eval(&self, stats: &TextStats) -> f64 {
        self.at(self.x.value(stats), self.y.value(stats))
    }
}

/// Coefficient set selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Profile {
    /// Original published coefficients.
    Original,
    /// Coefficients refitted for Portuguese text.
    #[default]
    AdaptedPt,
}

impl Profile {
    /// Wire identifier.
    pub fn id(self) -> &'static str {
        match self {
            Profile::Original => "original",
            Profile::AdaptedPt => "adapted-pt",
        }
    }

    /// Accepts `original`, `adapted`, `adapted-pt`.
    pub fn from_id(id: &str) -> Result<Self, MetricError> {
        match id.trim().to_ascii_lowercase().as_str() {
            "original" => Ok(Profile::Original),
            "adapted" | "adapted-pt" | "adapted_pt" | "pt" => Ok(Profile::AdaptedPt),
            _ => Err(MetricError::UnknownProfile),
        }
    }

    /// The plane for `formula` under this profile.
    pub fn plane(self, formula: Formula) -> Plane {
        use Variable::*;
        match (self, formula) {
            (Profile::Original, Formula::Flesch) => {
                Plane::new(206.835, -1.015, WordsPerSentence, -84.6, SyllablesPerWord)
            }
            (Profile::Original, Formula::GunningFog) => {
                Plane::new(0.0, 0.4, WordsPerSentence, 40.0, PolysyllabicRatio)
            }
            (Profile::Original, Formula::Ari) => {
                Plane::new(-21.43, 0.50, WordsPerSentence, 4.71, LettersPerWord)
            }
            (Profile::Original, Formula::FleschKincaid) => {
                Plane::new(-15.59, 0.39, WordsPerSentence, 11.8, SyllablesPerWord)
            }
            (Profile::Original, Formula::ColemanLiau) => {
                Plane::new(-15.8, 5.88, LettersPerWord, -2.96, SentencesPerWord)
            }
            (_, Formula::Gulpease) => {
                Plane::new(89.0, 300.0, SentencesPerWord, -10.0, LettersPerWord)
            }
            (Profile::AdaptedPt, Formula::Flesch) => {
                Plane::new(227.0, -1.04, WordsPerSentence, -72.0, SyllablesPerWord)
            }
            (Profile::AdaptedPt, Formula::GunningFog) => {
                Plane::new(0.0, 0.49, WordsPerSentence, 19.0, ComplexWordRatio)
            }
            (Profile::AdaptedPt, Formula::Ari) => {
                Plane::new(-20.0, 0.44, WordsPerSentence, 4.6, LettersPerWord)
            }
            (Profile::AdaptedPt, Formula::FleschKincaid) => {
                Plane::new(-18.0, 0.36, WordsPerSentence, 10.4, SyllablesPerWord)
            }
            (Profile::AdaptedPt, Formula::ColemanLiau) => {
                Plane::new(-14.0, 5.4, LettersPerWord, -21.0, SentencesPerWord)
            }
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// `c1 + c2 * x + c3 * y` for `formula` under `profile`. No clamping.
pub fn eval_formula(profile: Profile, formula: Formula, stats: &TextStats) -> f64 {
    profile.plane(formula).eval(stats)
}

/// Rewrites a Flesch reading-ease score on the grade-level scale.
pub fn convert_flesch_to_grade(flesch: f64, syllables_per_word: f64) -> f64 {
    63.88 - 0.38424 * flesch - 20.7 * syllables_per_word
}

/// Readability band of the final score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    /// Final score below 13.
    Alta,
    /// 13 up to (not including) 17.
    Media,
    /// 17 or more.
    Baixa,
}

impl Band {
    /// Lower edge of [`Band::Media`].
    pub const MEDIA_FROM: f64 = 13.0;
    /// Lower edge of [`Band::Baixa`].
    pub const BAIXA_FROM: f64 = 17.0;

    /// Classifies a raw final score.
    pub fn classify(final_raw: f64) -> Self {
        if final_raw >= Self::BAIXA_FROM {
            Band::Baixa
        } else if final_raw >= Self::MEDIA_FROM {
            Band::Media
        } else {
            Band::Alta
        }
    }

    /// Portuguese label without diacritics, as used on the wire.
    pub fn label(self) -> &'static str {
        match self {
            Band::Alta => "alta",
            Band::Media => "media",
            Band::Baixa => "baixa",
        }
    }

    /// Display label ("alta legibilidade", ...).
    pub fn description(self) -> &'static str {
        match self {
            Band::Alta => "alta legibilidade",
            Band::Media => "média legibilidade",
            Band::Baixa => "baixa legibilidade",
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Mean of the four grade-level indices.
pub fn final_score(fk: f64, gf: f64, ari: f64, cl: f64) -> f64 {
    (fk + gf + ari + cl) / 4.0
}

/// Half-up rounding to an integer.
pub fn round_half_up(x: f64) -> i64 {
    libm::floor(x + 0.5) as i64
}

/// The six indices of one text plus the aggregated result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexSet {
    /// Profile the indices were computed under.
    pub profile: Profile,
    /// Flesch reading ease.
    pub flesch: f64,
    /// Gulpease.
    pub gulpease: f64,
    /// Flesch-Kincaid grade level.
    pub flesch_kincaid: f64,
    /// Gunning fog.
    pub gunning_fog: f64,
    /// ARI.
    pub ari: f64,
    /// Coleman-Liau.
    pub coleman_liau: f64,
    /// Unrounded mean of FK, GF, ARI and CL.
    pub final_raw: f64,
    /// `final_raw` rounded half-up.
    pub final_display: i64,
    /// Band of `final_raw`.
    pub band: Band,
}

impl IndexSet {
    /// Evaluates all six formulas on `stats`.
    pub fn compute(stats: &TextStats, profile: Profile) -> Self {
        let f = |formula| eval_formula(profile, formula, stats);
        Self::from_grade_levels(
            profile,
            f(Formula::Flesch),
            f(Formula::Gulpease),
            f(Formula::FleschKincaid),
            f(Formula::GunningFog),
            f(Formula::Ari),
            f(Formula::ColemanLiau),
        )
    }

    /// Builds the set from already-computed indices.
    #[allow(clippy::too_many_arguments)]
    pub fn from_grade_levels(
        profile: Profile,
        flesch: f64,
        gulpease: f64,
        flesch_kincaid: f64,
        gunning_fog: f64,
        ari: f64,
        coleman_liau: f64,
    ) -> Self {
        let final_raw = final_score(flesch_kincaid, gunning_fog, ari, coleman_liau);
        Self {
            profile,
            flesch,
            gulpease,
            flesch_kincaid,
            gunning_fog,
            ari,
            coleman_liau,
            final_raw,
            final_display: round_half_up(final_raw),
            band: Band::classify(final_raw),
        }
    }

    /// Value of one formula.
    pub fn get(&self, formula: Formula) -> f64 {
        match formula {
            Formula::Flesch => self.flesch,
            Formula::GunningFog => self.gunning_fog,
            Formula::Ari => self.ari,
            Formula::FleschKincaid => self.flesch_kincaid,
            Formula::ColemanLiau => self.coleman_liau,
            Formula::Gulpease => self.gulpease,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(ws: f64, sw: f64, lw: f64, cw: f64) -> TextStats {
        TextStats {
            words_per_sentence: ws,
            syllables_per_word: sw,
            letters_per_word: lw,
            sentences_per_word: 1.0 / ws,
            complex_word_ratio: cw,
            polysyllabic_ratio: cw,
            ..TextStats::default()
        }
    }

    #[test]
    fn adapted_examples() {
        let s = stats(10.3, 1.9, 4.3, 0.08);
        let p = Profile::AdaptedPt;
        let close = |formula, want: f64| {
            let got = eval_formula(p, formula, &s);
            assert!((got - want).abs() < 1e-2, "{formula:?}: {got} vs {want}");
        };
        close(Formula::Flesch, 79.488);
        close(Formula::FleschKincaid, 5.468);
        close(Formula::Ari, 4.312);
        close(Formula::ColemanLiau, 7.181);
        close(Formula::GunningFog, 6.567);
    }

    #[test]
    fn conversion() {
        assert!((convert_flesch_to_grade(100.0, 1.0) - 4.756).abs() < 1e-9);
        assert_eq!(convert_flesch_to_grade(0.0, 0.0), 63.88);
    }

    #[test]
    fn final_and_band() {
        let set = IndexSet::from_grade_levels(Profile::AdaptedPt, 0.0, 0.0, 5.5, 6.6, 4.3, 7.2);
        assert!((set.final_raw - 5.9).abs() < 1e-12);
        assert_eq!(set.final_display, 6);
        assert_eq!(set.band, Band::Alta);
        let at = |v| IndexSet::from_grade_levels(Profile::AdaptedPt, 0.0, 0.0, v, v, v, v);
        assert_eq!(at(13.0).band, Band::Media);
        assert_eq!(at(12.999).band, Band::Alta);
        assert_eq!(at(16.999).band, Band::Media);
        assert_eq!(at(17.0).band, Band::Baixa);
        assert_eq!(at(13.0).final_raw, 13.0);
    }

    #[test]
    fn rounding_half_up() {
        assert_eq!(round_half_up(5.5), 6);
        assert_eq!(round_half_up(6.5), 7);
        assert_eq!(round_half_up(5.49), 5);
        assert_eq!(round_half_up(-0.5), 0);
    }

    #[test]
    fn gulpease_is_shared() {
        let s = stats(12.0, 2.0, 4.8, 0.1);
        assert_eq!(
            eval_formula(Profile::Original, Formula::Gulpease, &s),
            eval_formula(Profile::AdaptedPt, Formula::Gulpease, &s)
        );
    }

    #[test]
    fn ids_round_trip() {
        for f in Formula::ALL {
            assert_eq!(Formula::from_id(f.id()), Ok(f));
        }
        assert_eq!(Formula::from_id("smog"), Err(MetricError::UnknownFormula));
        assert_eq!(Profile::from_id("adapted"), Ok(Profile::AdaptedPt));
        assert_eq!(Profile::from_id("Original"), Ok(Profile::Original));
        assert!(Profile::from_id("x").is_err());
    }
}
