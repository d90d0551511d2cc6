use super::CalibrationError;

fn check_lengths(a: &[f64], b: &[f64]) -> Result<(), CalibrationError> {
    if a.len() != b.len() {
        return Err(CalibrationError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(CalibrationError::TooFewRows {
            got: a.len(),
            need: 2,
        });
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(CalibrationError::NonFinite);
    }
    Ok(())
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Sample Pearson correlation coefficient.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64, CalibrationError> {
    check_lengths(a, b)?;
    let (ma, mb) = (mean(a), mean(b));
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    if saa == 0.0 || sbb == 0.0 {
        return Err(CalibrationError::ZeroVariance);
    }
    Ok((sab / libm::sqrt(saa * sbb)).clamp(-1.0, 1.0))
}

/// Mean of `a - b` with a band of two sample standard deviations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffBand {
    /// `mean(a - b)`.
    pub mean_diff: f64,
    /// `2 * sd(a - b)`, using the `N - 1` estimator.
    pub half_width: f64,
}

/// Mean difference between two paired series and its ±2σ half-width.
pub fn mean_diff_band(a: &[f64], b: &[f64]) -> Result<DiffBand, CalibrationError> {
    check_lengths(a, b)?;
    let n = a.len() as f64;
    let mean_diff = a.iter().zip(b).map(|(x, y)| x - y).sum::<f64>() / n;
    let var = a
        .iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y - mean_diff;
            d * d
        })
        .sum::<f64>()
        / (n - 1.0);
    Ok(DiffBand {
        mean_diff,
        half_width: 2.0 * libm::sqrt(var),
    })
}

/// Correlation plus mean difference of two paired series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonStats {
    /// Pearson correlation in `[-1, 1]`.
    pub pearson: f64,
    /// `mean(a - b)`.
    pub mean_diff: f64,
    /// `2 * sd(a - b)`.
    pub half_width: f64,
}

/// [`pearson`] and [`mean_diff_band`] together.
pub fn compare(a: &[f64], b: &[f64]) -> Result<ComparisonStats, CalibrationError> {
    let pearson = pearson(a, b)?;
    let band = mean_diff_band(a, b)?;
    Ok(ComparisonStats {
        pearson,
        mean_diff: band.mean_diff,
        half_width: band.half_width,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_correlations() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert_eq!(
            pearson(&[1.0, 2.0], &[1.0]),
            Err(CalibrationError::LengthMismatch { left: 2, right: 1 })
        );
        assert_eq!(
            pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(CalibrationError::ZeroVariance)
        );
        assert_eq!(
            mean_diff_band(&[1.0], &[1.0]),
            Err(CalibrationError::TooFewRows { got: 1, need: 2 })
        );
    }

    #[test]
    fn identical_series_have_zero_band() {
        let a = [3.0, 1.5, 8.25, 4.0];
        let band = mean_diff_band(&a, &a).unwrap();
        assert_eq!(band.mean_diff, 0.0);
        assert_eq!(band.half_width, 0.0);
    }

    #[test]
    fn band_by_hand() {
        // diffs 1, 2, 3: mean 2, sample sd 1
        let band = mean_diff_band(&[2.0, 4.0, 6.0], &[1.0, 2.0, 3.0]).unwrap();
        assert!((band.mean_diff - 2.0).abs() < 1e-15);
        assert!((band.half_width - 2.0).abs() < 1e-15);
    }
}
