//! CSV inputs and tables for `alt calibrate` and `alt compare`.

use std::fmt::Write;
use std::io::Read;

use alt_core::calibration::{compare, fit_plane, ComparisonStats};
use alt_core::{CalibrationSample, RegressionFit};
use serde::Serialize;

use crate::json::{round_to, SCHEMA};
use crate::AppError;

fn reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(input)
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize, AppError> {
    headers
        .iter()
        .position(|h| h.eq_ignore_ascii_case(name))
        .ok_or_else(|| AppError::Format(format!("missing CSV column `{name}`")))
}

fn number(record: &csv::StringRecord, idx: usize, name: &str) -> Result<f64, AppError> {
    let line = record.position().map_or(0, |p| p.line());
    let raw = record.get(idx).unwrap_or("");
    raw.parse::<f64>()
        .map_err(|_| AppError::Format(format!("line {line}: `{name}` is not a number: {raw:?}")))
}

fn csv_error(e: csv::Error) -> AppError {
    AppError::Format(format!("CSV: {e}"))
}

/// Reads `x,y,gl` rows.
pub fn read_sample<R: Read>(input: R) -> Result<CalibrationSample, AppError> {
    let mut rdr = reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let (ix, iy, ig) = (
        column(&headers, "x")?,
        column(&headers, "y")?,
        column(&headers, "gl")?,
    );
    let mut triples = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(csv_error)?;
        triples.push((
            number(&record, ix, "x")?,
            number(&record, iy, "y")?,
            number(&record, ig, "gl")?,
        ));
    }
    Ok(CalibrationSample::from_triples(triples))
}

/// Paired index values of one metric.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricPairs {
    /// Metric label as written in the CSV.
    pub metric: String,
    /// Values computed by this tool.
    pub alt: Vec<f64>,
    /// Reference values.
    pub reference: Vec<f64>,
}

/// Reads `id,metric,alt,ref` rows, grouped by metric in order of first
/// appearance.
pub fn read_pairs<R: Read>(input: R) -> Result<Vec<MetricPairs>, AppError> {
    let mut rdr = reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let im = column(&headers, "metric")?;
    let (ia, ir) = (column(&headers, "alt")?, column(&headers, "ref")?);
    let mut groups: Vec<MetricPairs> = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(csv_error)?;
        let metric = record.get(im).unwrap_or("").to_owned();
        let (a, r) = (number(&record, ia, "alt")?, number(&record, ir, "ref")?);
        let group = match groups.iter_mut().position(|g| g.metric == metric) {
            Some(i) => &mut groups[i],
            None => {
                groups.push(MetricPairs {
                    metric,
                    ..Default::default()
                });
                groups.last_mut().unwrap()
            }
        };
        group.alt.push(a);
        group.reference.push(r);
    }
    Ok(groups)
}

/// Statistics of one metric group.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricComparison {
    /// Metric label.
    pub metric: String,
    /// Number of pairs.
    pub n: usize,
    /// Correlation and mean difference of `alt - ref`.
    pub stats: ComparisonStats,
}

/// Compares every group.
pub fn compare_groups(groups: &[MetricPairs]) -> Result<Vec<MetricComparison>, AppError> {
    groups
        .iter()
        .map(|g| {
            let stats = compare(&g.alt, &g.reference)
                .map_err(|e| AppError::Format(format!("metric {}: {e}", g.metric)))?;
            Ok(MetricComparison {
                metric: g.metric.clone(),
                n: g.alt.len(),
                stats,
            })
        })
        .collect()
}

/// Correlation table in the layout `Metric, Correlation, Mean diff ± 2σ`.
pub fn comparison_text(rows: &[MetricComparison]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<8}{:>4}{:>13}{:>18}",
        "Metric", "N", "Correlation", "Mean diff ± 2σ"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<8}{:>4}{:>12.1}%{:>11.1} ± {:.1}",
            r.metric,
            r.n,
            100.0 * r.stats.pearson,
            r.stats.mean_diff,
            r.stats.half_width
        );
    }
    out
}

/// JSON for `alt compare --format json`.
pub fn comparison_json(rows: &[MetricComparison]) -> String {
    #[derive(Serialize)]
    #[serde(rename_all = "camelCase")]
    struct Row<'a> {
        metric: &'a str,
        n: usize,
        pearson: f64,
        pearson_percent: f64,
        mean_diff: f64,
        half_width: f64,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        schema: u32,
        metrics: Vec<Row<'a>>,
    }
    let metrics = rows
        .iter()
        .map(|r| Row {
            metric: &r.metric,
            n: r.n,
            pearson: r.stats.pearson,
            pearson_percent: round_to(100.0 * r.stats.pearson, 1),
            mean_diff: r.stats.mean_diff,
            half_width: r.stats.half_width,
        })
        .collect();
    serde_json::to_string_pretty(&Doc {
        schema: SCHEMA,
        metrics,
    })
    .expect("comparison serializes")
}

/// Fits the plane, mapping errors for display.
pub fn fit(sample: &CalibrationSample) -> Result<RegressionFit, AppError> {
    Ok(fit_plane(sample)?)
}

const COEFFICIENT_NAMES: [&str; 3] = ["C1", "C2 (x)", "C3 (y)"];

/// Fit table with value, standard error and p-value per coefficient.
pub fn fit_text(fit: &RegressionFit) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<12}{:>14}{:>14}{:>12}",
        "", "Value", "Std. error", "p-value"
    );
    for (k, name) in COEFFICIENT_NAMES.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:<12}{:>14.6}{:>14.6}{:>12.5}",
            name, fit.coefficients[k], fit.std_errors[k], fit.p_values[k]
        );
    }
    let _ = writeln!(
        out,
        "R²: {:.5}  (N = {}, dof = {})",
        fit.r2,
        fit.residuals.len(),
        fit.dof
    );
    out
}

/// JSON for `alt calibrate --format json`, residuals included.
pub fn fit_json(fit: &RegressionFit) -> String {
    #[derive(Serialize)]
    #[serde(rename_all = "camelCase")]
    struct Coef {
        name: &'static str,
        value: f64,
        std_error: f64,
        p_value: f64,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        schema: u32,
        n: usize,
        dof: usize,
        r2: f64,
        coefficients: Vec<Coef>,
        residuals: &'a [f64],
    }
    let coefficients = ["c1", "c2", "c3"]
        .iter()
        .enumerate()
        .map(|(k, &name)| Coef {
            name,
            value: fit.coefficients[k],
            std_error: fit.std_errors[k],
            p_value: fit.p_values[k],
        })
        .collect();
    serde_json::to_string_pretty(&Doc {
        schema: SCHEMA,
        n: fit.residuals.len(),
        dof: fit.dof,
        r2: fit.r2,
        coefficients,
        residuals: &fit.residuals,
    })
    .expect("fit serializes")
}

/// One residual per line.
pub fn residuals_text(fit: &RegressionFit) -> String {
    fit.residuals.iter().map(|e| format!("{e}\n")).collect()
}
