//! Coefficient calibration and evaluation statistics.
//!
//! [`fit_plane`] fits `gl ≈ c1 + c2 x + c3 y` by ordinary least squares with
//! standard errors, t-test p-values and R². [`pearson`] and
//! [`mean_diff_band`] compare two score series, e.g. the indices of a text
//! against those of its translation.

mod compare;
mod ols;
pub mod published;
mod tdist;

pub use compare::{compare, mean_diff_band, pearson, ComparisonStats, DiffBand};
pub use ols::{fit_plane, CalibrationSample, RegressionFit, SampleRow};
pub use tdist::{regularized_incomplete_beta, student_t_p_value};

/// Errors from fitting and comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CalibrationError {
    /// Fewer rows than the operation needs.
    #[error("too few rows: got {got}, need at least {need}")]
    TooFewRows {
        /// Rows supplied.
        got: usize,
        /// Minimum accepted.
        need: usize,
    },
    /// The design matrix `[1, x, y]` does not have full column rank.
    #[error("design matrix is rank deficient (collinear or constant columns)")]
    RankDeficient,
    /// The two series differ in length.
    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch {
        /// Length of the first series.
        left: usize,
        /// Length of the second series.
        right: usize,
    },
    /// A series is constant, so the correlation is undefined.
    #[error("a series has zero variance")]
    ZeroVariance,
    /// Degrees of freedom must be at least one.
    #[error("degrees of freedom must be >= 1")]
    InvalidDof,
    /// An input value is NaN or infinite.
    #[error("non-finite input value")]
    NonFinite,
}
