//! Orchestration: run every requested solver on the shared grid, compare
//! the results pairwise, evaluate configured thresholds, and emit files.
//!
//! A failing solver does not abort the run; its error is recorded and the
//! remaining solvers still execute and are still compared. File writing is
//! serialized and ordered, so output is deterministic for a fixed config
//! and seed regardless of the worker-thread count.

use std::path::{Path, PathBuf};

use crate::compare::{compare_series, threshold_measure, DeviationReport};
use crate::config::{FrameTag, OutputFormat, ScenarioConfig, SolverId, ThresholdConfig};
use crate::error::CliError;
use crate::output::{emit_timeseries, SeriesHeader, TimeSeries};
use crate::solvers::{run_solver, SolverOutput};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub out_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    /// Replaces the configured Monte Carlo seed.
    pub seed: Option<u64>,
    /// Size of the worker pool used inside solvers; defaults to the
    /// process-global pool.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub a: SolverId,
    pub b: SolverId,
    pub report: DeviationReport,
}

#[derive(Debug, Clone)]
pub struct ThresholdOutcome {
    pub threshold: ThresholdConfig,
    /// `None` when a participating solver failed.
    pub measured: Option<f64>,
    pub violated: bool,
}

#[derive(Debug, Clone)]
pub struct ScenarioSummary {
    pub grid_points: usize,
    pub solver_errors: Vec<(SolverId, String)>,
    pub pair_reports: Vec<PairReport>,
    pub threshold_outcomes: Vec<ThresholdOutcome>,
    pub files: Vec<PathBuf>,
}

impl ScenarioSummary {
    /// Exit-code contract: 0 all thresholds met, 2 a threshold violated,
    /// 1 execution (solver) failure. Failure wins over violation.
    pub fn exit_code(&self) -> i32 {
        if !self.solver_errors.is_empty() {
            1
        } else if self.threshold_outcomes.iter().any(|t| t.violated) {
            2
        } else {
            0
        }
    }
}

fn series_header(
    cfg: &ScenarioConfig,
    solver: &str,
    frame: Option<FrameTag>,
    seed: Option<u64>,
) -> SeriesHeader {
    SeriesHeader {
        solver: solver.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        frame,
        seed,
        params: cfg.parameter_echo(),
    }
}

/// Bare series wrapper for in-memory comparisons.
fn comparison_series(
    cfg: &ScenarioConfig,
    out: &SolverOutput,
    frame: Option<FrameTag>,
    values: &[nalgebra::Vector3<f64>],
) -> TimeSeries {
    TimeSeries::new(
        series_header(cfg, out.solver.as_str(), frame, None),
        out.times.clone(),
        values.to_vec(),
    )
}

fn pair_report(
    cfg: &ScenarioConfig,
    a: &SolverOutput,
    b: &SolverOutput,
) -> Result<DeviationReport, CliError> {
    let frame = a.values_lab.is_some().then_some(FrameTag::Rotating);
    let mut report = compare_series(
        &comparison_series(cfg, a, frame, &a.values),
        &comparison_series(cfg, b, frame, &b.values),
        None,
    )?;

    // Z-scores are evaluated in the lab frame, where the Monte Carlo
    // standard errors are native (the exact frame rotation would mix
    // per-component errors).
    let (mc, other) = if a.std_err_lab.is_some() {
        (a, b)
    } else if b.std_err_lab.is_some() {
        (b, a)
    } else {
        return Ok(report);
    };
    let se = mc.std_err_lab.as_ref().expect("selected output has standard errors");
    let (Some(mc_lab), Some(other_lab)) = (&mc.values_lab, &other.values_lab) else {
        return Ok(report);
    };
    let lab_report = compare_series(
        &comparison_series(cfg, mc, Some(FrameTag::Lab), mc_lab),
        &comparison_series(cfg, other, Some(FrameTag::Lab), other_lab),
        Some(&comparison_series(cfg, mc, Some(FrameTag::Lab), se)),
    )?;
    for c in 0..3 {
        report.component[c].max_z = lab_report.component[c].max_z;
    }
    report.max_z = lab_report.max_z;
    Ok(report)
}

fn emit_outputs(
    cfg: &ScenarioConfig,
    outputs: &[SolverOutput],
    effective_seed: Option<u64>,
    dir: &Path,
    format: OutputFormat,
) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for out in outputs {
        let seed = (out.solver == SolverId::Mc).then_some(effective_seed).flatten();
        for frame in cfg.output_frames() {
            let Some(values) = out.frame_values(frame) else { continue };
            let name = match frame {
                Some(tag) => format!("{}-{}.{}", out.solver, tag, format.extension()),
                None => format!("{}.{}", out.solver, format.extension()),
            };
            let path = dir.join(name);
            let series = TimeSeries::new(
                series_header(cfg, out.solver.as_str(), frame, seed),
                out.times.clone(),
                values.clone(),
            );
            emit_timeseries(&series, &path, format)?;
            files.push(path);
        }
        if let Some(se) = &out.std_err_lab {
            let path = dir.join(format!("mc-std-err.{}", format.extension()));
            let series = TimeSeries::new(
                series_header(cfg, "mc-std-err", Some(FrameTag::Lab), seed),
                out.times.clone(),
                se.clone(),
            );
            emit_timeseries(&series, &path, format)?;
            files.push(path);
        }
    }
    Ok(files)
}

pub fn run_scenario(
    cfg: &ScenarioConfig,
    opts: &RunOptions,
) -> Result<ScenarioSummary, CliError> {
    cfg.validate()?;
    let t_grid = cfg.time_grid();

    let solve_all = || {
        let mut outputs: Vec<SolverOutput> = Vec::new();
        let mut errors: Vec<(SolverId, String)> = Vec::new();
        for &id in &cfg.solvers {
            match run_solver(cfg, id, &t_grid, opts.seed) {
                Ok(out) => outputs.push(out),
                Err(e) => errors.push((id, e.to_string())),
            }
        }
        (outputs, errors)
    };
    let (outputs, solver_errors) = match opts.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| {
                CliError::Config { field: "--threads".to_string(), message: e.to_string() }
            })?;
            pool.install(solve_all)
        }
        None => solve_all(),
    };

    let mut pair_reports = Vec::new();
    for i in 0..outputs.len() {
        for j in (i + 1)..outputs.len() {
            let report = pair_report(cfg, &outputs[i], &outputs[j])?;
            pair_reports.push(PairReport {
                a: outputs[i].solver,
                b: outputs[j].solver,
                report,
            });
        }
    }

    let mut threshold_outcomes = Vec::new();
    for th in &cfg.thresholds {
        let found = pair_reports.iter().find(|p| {
            (p.a == th.a && p.b == th.b) || (p.a == th.b && p.b == th.a)
        });
        let outcome = match found {
            Some(pair) => {
                let measured = threshold_measure(&pair.report, th);
                ThresholdOutcome {
                    threshold: *th,
                    measured: Some(measured),
                    violated: !(measured <= th.limit),
                }
            }
            None => ThresholdOutcome { threshold: *th, measured: None, violated: false },
        };
        threshold_outcomes.push(outcome);
    }

    let dir = opts.out_dir.clone().unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
    let format = opts.format.unwrap_or(cfg.output.format);
    let effective_seed = opts.seed.or(cfg.monte_carlo.as_ref().map(|m| m.seed));
    let files = emit_outputs(cfg, &outputs, effective_seed, &dir, format)?;

    Ok(ScenarioSummary {
        grid_points: t_grid.len(),
        solver_errors,
        pair_reports,
        threshold_outcomes,
        files,
    })
}
