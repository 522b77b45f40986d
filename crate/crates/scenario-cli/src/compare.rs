//! Pairwise deviation metrics between solver outputs on a shared grid.

use crate::config::{ComponentSel, MetricKind, ThresholdConfig};
use crate::error::CliError;
use crate::output::TimeSeries;

/// Standard errors at or below this are treated as exactly zero (e.g. the
/// deterministic t = 0 point of a Monte Carlo ensemble).
const SE_FLOOR: f64 = 1e-15;
/// Deviation tolerated at zero-standard-error points.
const ZERO_SE_DEV: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentStats {
    pub max_abs: f64,
    /// Time at which the largest absolute deviation occurs.
    pub t_at_max: f64,
    pub rms: f64,
    /// Largest deviation in units of the standard error, when errors
    /// were supplied.
    pub max_z: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationReport {
    pub n_points: usize,
    pub component: [ComponentStats; 3],
    pub max_abs: f64,
    pub rms: f64,
    pub max_z: Option<f64>,
}

impl DeviationReport {
    fn empty() -> Self {
        let zero = ComponentStats { max_abs: 0.0, t_at_max: 0.0, rms: 0.0, max_z: None };
        DeviationReport { n_points: 0, component: [zero; 3], max_abs: 0.0, rms: 0.0, max_z: None }
    }
}

fn check_grids(what: &str, a: &TimeSeries, b: &TimeSeries) -> Result<(), CliError> {
    if a.times.len() != b.times.len() {
        return Err(CliError::GridMismatch(format!(
            "{what}: {} vs {} points",
            a.times.len(),
            b.times.len()
        )));
    }
    for (k, (ta, tb)) in a.times.iter().zip(&b.times).enumerate() {
        if ta != tb {
            return Err(CliError::GridMismatch(format!("{what}: t[{k}] = {ta} vs {tb}")));
        }
    }
    Ok(())
}

fn check_frames(a: &TimeSeries, b: &TimeSeries) -> Result<(), CliError> {
    if let (Some(fa), Some(fb)) = (a.header.frame, b.header.frame) {
        if fa != fb {
            return Err(CliError::FrameMismatch(fa.to_string(), fb.to_string()));
        }
    }
    Ok(())
}

/// Deviation metrics between two series on the identical grid, optionally
/// scaled by per-point standard errors (Monte Carlo error-aware mode).
pub fn compare_series(
    a: &TimeSeries,
    b: &TimeSeries,
    std_err: Option<&TimeSeries>,
) -> Result<DeviationReport, CliError> {
    check_frames(a, b)?;
    check_grids("series", a, b)?;
    if let Some(se) = std_err {
        check_frames(a, se)?;
        check_grids("standard errors", a, se)?;
    }

    let n = a.times.len();
    if n == 0 {
        return Ok(DeviationReport::empty());
    }

    let mut report = DeviationReport::empty();
    report.n_points = n;
    let mut sum_sq = [0.0_f64; 3];
    let mut max_z = [0.0_f64; 3];

    for k in 0..n {
        let dev = a.values[k] - b.values[k];
        for c in 0..3 {
            let abs = dev[c].abs();
            if abs > report.component[c].max_abs {
                report.component[c].max_abs = abs;
                report.component[c].t_at_max = a.times[k];
            }
            sum_sq[c] += dev[c] * dev[c];
            if let Some(se) = std_err {
                let sigma = se.values[k][c];
                let z = if sigma > SE_FLOOR {
                    abs / sigma
                } else if abs <= ZERO_SE_DEV {
                    0.0
                } else {
                    f64::INFINITY
                };
                max_z[c] = max_z[c].max(z);
            }
        }
    }

    for c in 0..3 {
        report.component[c].rms = (sum_sq[c] / n as f64).sqrt();
        if std_err.is_some() {
            report.component[c].max_z = Some(max_z[c]);
        }
        report.max_abs = report.max_abs.max(report.component[c].max_abs);
    }
    report.rms = ((sum_sq[0] + sum_sq[1] + sum_sq[2]) / (3.0 * n as f64)).sqrt();
    if std_err.is_some() {
        report.max_z = Some(max_z[0].max(max_z[1]).max(max_z[2]));
    }
    Ok(report)
}

/// The metric value a threshold gates on, extracted from a report.
/// Returns infinity if the threshold asks for z-scores but the report
/// carries none.
pub fn threshold_measure(report: &DeviationReport, th: &ThresholdConfig) -> f64 {
    let pick = |all: f64, per: &dyn Fn(usize) -> f64| match th.component {
        ComponentSel::X => per(0),
        ComponentSel::Y => per(1),
        ComponentSel::Z => per(2),
        ComponentSel::All => all,
    };
    match th.metric {
        MetricKind::MaxAbs => pick(report.max_abs, &|c| report.component[c].max_abs),
        MetricKind::Rms => pick(report.rms, &|c| report.component[c].rms),
        MetricKind::ZScore => pick(
            report.max_z.unwrap_or(f64::INFINITY),
            &|c| report.component[c].max_z.unwrap_or(f64::INFINITY),
        ),
    }
}
