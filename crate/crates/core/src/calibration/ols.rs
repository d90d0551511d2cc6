use alloc::vec::Vec;

use super::{student_t_p_value, CalibrationError};

/// One calibration observation: the two ratio variables of a text and the
/// reference grade level of its translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    /// First ratio variable.
    pub x: f64,
    /// Second ratio variable.
    pub y: f64,
    /// Reference index.
    pub gl: f64,
}

/// The N×3 calibration matrix.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CalibrationSample {
    /// Observations in input order.
    pub rows: Vec<SampleRow>,
}

impl CalibrationSample {
    /// Minimum rows for a fit with one residual degree of freedom.
    pub const MIN_ROWS: usize = 4;

    /// Wraps rows.
    pub fn new(rows: Vec<SampleRow>) -> Self {
        Self { rows }
    }

    /// Builds a sample from `(x, y, gl)` triples.
    pub fn from_triples(triples: impl IntoIterator<Item = (f64, f64, f64)>) -> Self {
        Self::new(
            triples
                .into_iter()
                .map(|(x, y, gl)| SampleRow { x, y, gl })
                .collect(),
        )
    }

    /// Number of observations.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// `true` when there are no observations.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Result of a plane fit.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionFit {
    /// Intercept and slopes `[c1, c2, c3]`.
    pub coefficients: [f64; 3],
    /// Standard errors of the coefficients.
    pub std_errors: [f64; 3],
    /// Two-sided p-values of `c_k = 0` with `N - 3` degrees of freedom.
    pub p_values: [f64; 3],
    /// Coefficient of determination.
    pub r2: f64,
    /// `gl - fitted` per row, in input order.
    pub residuals: Vec<f64>,
    /// Residual degrees of freedom (`N - 3`).
    pub dof: usize,
}

impl RegressionFit {
    /// Evaluates the fitted plane.
    pub fn predict(&self, x: f64, y: f64) -> f64 {
        let [c1, c2, c3] = self.coefficients;
        c1 + c2 * x + c3 * y
    }
}

type Mat3 = [[f64; 3]; 3];

/// Solves `m * X = rhs` for `K` right-hand sides by Gaussian elimination
/// with partial pivoting. `None` when a pivot falls below the relative
/// tolerance.
#[allow(clippy::needless_range_loop)]
fn solve3<const K: usize>(mut m: Mat3, mut rhs: [[f64; K]; 3]) -> Option<[[f64; K]; 3]> {
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return None;
    }
    let tol = scale * 1e-12;
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap_or(col);
        if m[pivot][col].abs() <= tol {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..3 {
            let factor = m[row][col] / m[col][col];
            for j in col..3 {
                m[row][j] -= factor * m[col][j];
            }
            for j in 0..K {
                rhs[row][j] -= factor * rhs[col][j];
            }
        }
    }
    let mut out = [[0.0; K]; 3];
    for row in (0..3).rev() {
        for j in 0..K {
            let mut acc = rhs[row][j];
            for k in row + 1..3 {
                acc -= m[row][k] * out[k][j];
            }
            out[row][j] = acc / m[row][row];
        }
    }
    Some(out)
}

/// Ordinary least squares fit of `gl ≈ c1 + c2 x + c3 y`, solved through the
/// normal equations.
pub fn fit_plane(sample: &CalibrationSample) -> Result<RegressionFit, CalibrationError> {
    let n = sample.len();
    if n < CalibrationSample::MIN_ROWS {
        return Err(CalibrationError::TooFewRows {
            got: n,
            need: CalibrationSample::MIN_ROWS,
        });
    }
    if sample
        .rows
        .iter()
        .any(|r| !(r.x.is_finite() && r.y.is_finite() && r.gl.is_finite()))
    {
        return Err(CalibrationError::NonFinite);
    }

    let mut normal: Mat3 = [[0.0; 3]; 3];
    let mut rhs = [[0.0; 1]; 3];
    for r in &sample.rows {
        let a = [1.0, r.x, r.y];
        for i in 0..3 {
            for j in 0..3 {
                normal[i][j] += a[i] * a[j];
            }
            rhs[i][0] += a[i] * r.gl;
        }
    }

    let identity = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let beta = solve3(normal, rhs).ok_or(CalibrationError::RankDeficient)?;
    let inverse = solve3(normal, identity).ok_or(CalibrationError::RankDeficient)?;
    let coefficients = [beta[0][0], beta[1][0], beta[2][0]];
    let [c1, c2, c3] = coefficients;

    let residuals: Vec<f64> = sample
        .rows
        .iter()
        .map(|r| r.gl - (c1 + c2 * r.x + c3 * r.y))
        .collect();
    let ss_res: f64 = residuals.iter().map(|e| e * e).sum();
    let mean = sample.rows.iter().map(|r| r.gl).sum::<f64>() / n as f64;
    let ss_tot: f64 = sample
        .rows
        .iter()
        .map(|r| (r.gl - mean) * (r.gl - mean))
        .sum();
    let r2 = if ss_tot > 0.0 {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    } else {
        1.0
    };

    let dof = n - 3;
    let sigma2 = ss_res / dof as f64;
    let mut std_errors = [0.0; 3];
    let mut p_values = [0.0; 3];
    for k in 0..3 {
        let se = libm::sqrt((sigma2 * inverse[k][k]).max(0.0));
        std_errors[k] = se;
        p_values[k] = if se > 0.0 {
            student_t_p_value(coefficients[k] / se, dof as f64)?
        } else if coefficients[k] == 0.0 {
            1.0
        } else {
            0.0
        };
    }

    Ok(RegressionFit {
        coefficients,
        std_errors,
        p_values,
        r2,
        residuals,
        dof,
    })
}
