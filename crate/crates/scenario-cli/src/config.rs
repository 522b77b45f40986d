//! Configuration schema for scenario runs.
//!
//! Everything is expressed in units of the qubit splitting (`omega = 1`
//! reproduces the reference scenarios); times are in inverse splittings.
//! A config names a scenario kind, the solvers to run on a shared output
//! grid, the physical parameters, and optional pairwise deviation
//! thresholds that gate the process exit code.

use std::fmt;
use std::path::Path;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Hard cap on output grid length; guards against typo'd `dt_out`.
const MAX_GRID_POINTS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    /// Qubit with a transverse harmonic drive and colored longitudinal
    /// classical noise.
    ClassicalDephasing,
    /// Qubit with a harmonic drive coupled to damped bosonic modes.
    QuantumPm,
}

impl ScenarioKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioKind::ClassicalDephasing => "classical-dephasing",
            ScenarioKind::QuantumPm => "quantum-pm",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverId {
    /// Monte Carlo average over noise realizations (classical).
    Mc,
    /// Exact memory-kernel solution via rational Laplace inversion.
    NovikovLaplace,
    /// Exact memory-kernel solution via the extended linear system.
    NovikovOde,
    /// Second-order time-local master equation (classical).
    Tl2,
    /// Third-order time-local master equation (classical).
    Tl3,
    /// Exact composite qubit + modes propagation (quantum).
    PmExact,
    /// Second-order time-local rates for the quantum bath.
    Tcl2Q,
    /// Third-order time-local rates for the quantum bath.
    Tcl3Q,
}

impl SolverId {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverId::Mc => "mc",
            SolverId::NovikovLaplace => "novikov-laplace",
            SolverId::NovikovOde => "novikov-ode",
            SolverId::Tl2 => "tl2",
            SolverId::Tl3 => "tl3",
            SolverId::PmExact => "pm-exact",
            SolverId::Tcl2Q => "tcl2-q",
            SolverId::Tcl3Q => "tcl3-q",
        }
    }

    pub fn scenario(&self) -> ScenarioKind {
        match self {
            SolverId::Mc
            | SolverId::NovikovLaplace
            | SolverId::NovikovOde
            | SolverId::Tl2
            | SolverId::Tl3 => ScenarioKind::ClassicalDephasing,
            SolverId::PmExact | SolverId::Tcl2Q | SolverId::Tcl3Q => ScenarioKind::QuantumPm,
        }
    }
}

impl fmt::Display for SolverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Frame tag attached to classical-scenario output series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameTag {
    Lab,
    /// Co-rotating with the drive.
    Rotating,
}

impl FrameTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FrameTag::Lab => "lab",
            FrameTag::Rotating => "rotating",
        }
    }
}

impl fmt::Display for FrameTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QubitConfig {
    /// Level splitting; the natural frequency unit (1.0 in the presets).
    pub omega: f64,
    /// Initial Bloch vector; defaults to +z for the classical scenario
    /// and to the ground state -z for the quantum scenario.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_bloch: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriveConfig {
    /// Peak drive amplitude D; the transverse Hamiltonian carries D/2.
    pub amplitude: f64,
    /// Drive angular frequency (resonant when equal to `qubit.omega`).
    pub frequency: f64,
    /// Drive phase at t = 0.
    pub phase: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseConfig {
    /// Integrated noise power g; the stationary variance is g / (4 tau).
    pub power: f64,
    /// Correlation (memory) time tau of the colored noise.
    pub memory_time: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeConfig {
    /// Qubit-mode coupling strength.
    pub coupling: f64,
    /// Mode frequency.
    pub frequency: f64,
    /// Mode energy decay rate (must be positive).
    pub decay: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathConfig {
    /// Highest Fock level kept per mode.
    pub n_max: usize,
    pub modes: Vec<ModeConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_max: f64,
    /// Output sampling step; all solvers report on this shared grid.
    pub dt_out: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McConfig {
    pub n_traj: usize,
    /// Trajectory integration step; `dt_out` must be a multiple of it.
    pub dt: f64,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Directory receiving one file per solver (and frame).
    #[serde(default = "default_out_dir")]
    pub dir: String,
    #[serde(default)]
    pub format: OutputFormat,
    /// Frames to emit for the classical scenario; defaults to rotating
    /// only. Quantum output is frame-free and rejects this field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frames: Option<Vec<FrameTag>>,
}

fn default_out_dir() -> String {
    "out".to_string()
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig { dir: default_out_dir(), format: OutputFormat::Csv, frames: None }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentSel {
    X,
    Y,
    Z,
    #[default]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricKind {
    MaxAbs,
    Rms,
    /// Deviations divided by Monte Carlo standard errors; requires one
    /// side of the pair to be the `mc` solver.
    ZScore,
}

/// A pairwise deviation gate: if the selected metric between the two
/// solvers exceeds `limit`, the run exits with the threshold-violation
/// code.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdConfig {
    pub a: SolverId,
    pub b: SolverId,
    pub metric: MetricKind,
    #[serde(default)]
    pub component: ComponentSel,
    pub limit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: ScenarioKind,
    pub solvers: Vec<SolverId>,
    pub qubit: QubitConfig,
    pub drive: DriveConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise: Option<NoiseConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bath: Option<BathConfig>,
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<McConfig>,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub thresholds: Vec<ThresholdConfig>,
}

fn require_finite(field: &str, value: f64) -> Result<(), CliError> {
    if !value.is_finite() {
        return Err(CliError::config(field, format!("must be finite, got {value}")));
    }
    Ok(())
}

fn require_positive(field: &str, value: f64) -> Result<(), CliError> {
    require_finite(field, value)?;
    if value <= 0.0 {
        return Err(CliError::config(field, format!("must be positive, got {value}")));
    }
    Ok(())
}

impl ScenarioConfig {
    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let cfg: ScenarioConfig = toml::from_str(&text)
            .map_err(|e| CliError::Parse { path: path.display().to_string(), message: e.to_string() })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.solvers.is_empty() {
            return Err(CliError::config("solvers", "at least one solver is required"));
        }
        for (i, s) in self.solvers.iter().enumerate() {
            if self.solvers[..i].contains(s) {
                return Err(CliError::config("solvers", format!("duplicate solver `{s}`")));
            }
            if s.scenario() != self.scenario {
                return Err(CliError::config(
                    "solvers",
                    format!("solver `{s}` is not available in the `{}` scenario", self.scenario),
                ));
            }
        }

        require_positive("qubit.omega", self.qubit.omega)?;
        if let Some(r0) = self.qubit.initial_bloch {
            let v = Vector3::from(r0);
            for (i, c) in v.iter().enumerate() {
                require_finite(&format!("qubit.initial_bloch[{i}]"), *c)?;
            }
            if v.norm() > 1.0 + 1e-9 {
                return Err(CliError::config(
                    "qubit.initial_bloch",
                    format!("length {} exceeds 1 (not a physical state)", v.norm()),
                ));
            }
        }

        require_finite("drive.amplitude", self.drive.amplitude)?;
        if self.drive.amplitude < 0.0 {
            return Err(CliError::config("drive.amplitude", "must be non-negative"));
        }
        require_finite("drive.frequency", self.drive.frequency)?;
        require_finite("drive.phase", self.drive.phase)?;

        match self.scenario {
            ScenarioKind::ClassicalDephasing => {
                let noise = self.noise.as_ref().ok_or_else(|| {
                    CliError::config("noise", "required for the classical-dephasing scenario")
                })?;
                require_finite("noise.power", noise.power)?;
                if noise.power < 0.0 {
                    return Err(CliError::config("noise.power", "must be non-negative"));
                }
                require_positive("noise.memory_time", noise.memory_time)?;
                if self.bath.is_some() {
                    return Err(CliError::config(
                        "bath",
                        "only valid for the quantum-pm scenario",
                    ));
                }
            }
            ScenarioKind::QuantumPm => {
                let bath = self.bath.as_ref().ok_or_else(|| {
                    CliError::config("bath", "required for the quantum-pm scenario")
                })?;
                if bath.modes.is_empty() {
                    return Err(CliError::config("bath.modes", "at least one mode is required"));
                }
                if bath.n_max == 0 {
                    return Err(CliError::config("bath.n_max", "must be at least 1"));
                }
                for (i, m) in bath.modes.iter().enumerate() {
                    require_finite(&format!("bath.modes[{i}].coupling"), m.coupling)?;
                    require_finite(&format!("bath.modes[{i}].frequency"), m.frequency)?;
                    require_positive(&format!("bath.modes[{i}].decay"), m.decay)?;
                }
                if self.noise.is_some() {
                    return Err(CliError::config(
                        "noise",
                        "only valid for the classical-dephasing scenario",
                    ));
                }
                if self.monte_carlo.is_some() {
                    return Err(CliError::config(
                        "monte_carlo",
                        "only valid for the classical-dephasing scenario",
                    ));
                }
                if self.output.frames.is_some() {
                    return Err(CliError::config(
                        "output.frames",
                        "quantum-pm output is frame-free; frames apply to classical-dephasing only",
                    ));
                }
            }
        }

        require_positive("grid.t_max", self.grid.t_max)?;
        require_positive("grid.dt_out", self.grid.dt_out)?;
        let n = (self.grid.t_max / self.grid.dt_out).round();
        if n < 1.0 {
            return Err(CliError::config("grid.dt_out", "must not exceed t_max"));
        }
        if (n * self.grid.dt_out - self.grid.t_max).abs() > 1e-9 * self.grid.t_max.max(1.0) {
            return Err(CliError::config(
                "grid.dt_out",
                format!("t_max = {} is not a whole number of output steps", self.grid.t_max),
            ));
        }
        if n as usize >= MAX_GRID_POINTS {
            return Err(CliError::config(
                "grid.dt_out",
                format!("grid would have {} points (limit {})", n as usize + 1, MAX_GRID_POINTS),
            ));
        }

        let wants_mc = self.solvers.contains(&SolverId::Mc);
        match (&self.monte_carlo, wants_mc) {
            (None, true) => {
                return Err(CliError::config(
                    "monte_carlo",
                    "required when the `mc` solver is requested",
                ));
            }
            (Some(_), false) => {
                return Err(CliError::config(
                    "monte_carlo",
                    "present but the `mc` solver is not in `solvers`",
                ));
            }
            (Some(mc), true) => {
                if mc.n_traj == 0 {
                    return Err(CliError::config("monte_carlo.n_traj", "must be at least 1"));
                }
                require_positive("monte_carlo.dt", mc.dt)?;
                let stride = (self.grid.dt_out / mc.dt).round();
                if stride < 1.0
                    || (stride * mc.dt - self.grid.dt_out).abs() > 1e-9 * self.grid.dt_out
                {
                    return Err(CliError::config(
                        "monte_carlo.dt",
                        format!(
                            "grid.dt_out = {} must be a whole multiple of dt = {}",
                            self.grid.dt_out, mc.dt
                        ),
                    ));
                }
            }
            (None, false) => {}
        }

        if let Some(frames) = &self.output.frames {
            if frames.is_empty() {
                return Err(CliError::config("output.frames", "must not be empty when given"));
            }
            for (i, f) in frames.iter().enumerate() {
                if frames[..i].contains(f) {
                    return Err(CliError::config(
                        "output.frames",
                        format!("duplicate frame `{f}`"),
                    ));
                }
            }
        }

        for (i, th) in self.thresholds.iter().enumerate() {
            let field = format!("thresholds[{i}]");
            if !self.solvers.contains(&th.a) {
                return Err(CliError::config(
                    &format!("{field}.a"),
                    format!("solver `{}` is not in `solvers`", th.a),
                ));
            }
            if !self.solvers.contains(&th.b) {
                return Err(CliError::config(
                    &format!("{field}.b"),
                    format!("solver `{}` is not in `solvers`", th.b),
                ));
            }
            if th.a == th.b {
                return Err(CliError::config(&field, "compares a solver with itself"));
            }
            require_positive(&format!("{field}.limit"), th.limit)?;
            if th.metric == MetricKind::ZScore
                && th.a != SolverId::Mc
                && th.b != SolverId::Mc
            {
                return Err(CliError::config(
                    &format!("{field}.metric"),
                    "z-score requires one side of the pair to be `mc`",
                ));
            }
        }

        Ok(())
    }

    /// The shared output grid `0, dt_out, 2 dt_out, ..` up to `t_max`.
    pub fn time_grid(&self) -> Vec<f64> {
        let n = (self.grid.t_max / self.grid.dt_out).round() as usize;
        (0..=n).map(|k| k as f64 * self.grid.dt_out).collect()
    }

    /// Configured or scenario-default initial Bloch vector: +z for the
    /// classical scenario, the ground state -z for the quantum one.
    pub fn initial_bloch(&self) -> Vector3<f64> {
        match self.qubit.initial_bloch {
            Some(r0) => Vector3::from(r0),
            None => match self.scenario {
                ScenarioKind::ClassicalDephasing => Vector3::new(0.0, 0.0, 1.0),
                ScenarioKind::QuantumPm => Vector3::new(0.0, 0.0, -1.0),
            },
        }
    }

    /// Frames emitted for each solver: configured list, or scenario
    /// default (rotating for classical, none/frame-free for quantum).
    pub fn output_frames(&self) -> Vec<Option<FrameTag>> {
        match self.scenario {
            ScenarioKind::ClassicalDephasing => match &self.output.frames {
                Some(frames) => frames.iter().map(|f| Some(*f)).collect(),
                None => vec![Some(FrameTag::Rotating)],
            },
            ScenarioKind::QuantumPm => vec![None],
        }
    }

    /// Ordered parameter echo used in output headers.
    pub fn parameter_echo(&self) -> Vec<(String, String)> {
        let fp = |v: f64| format!("{v:.16e}");
        let mut out = vec![
            ("scenario".to_string(), self.scenario.to_string()),
            ("omega".to_string(), fp(self.qubit.omega)),
            ("drive_amplitude".to_string(), fp(self.drive.amplitude)),
            ("drive_frequency".to_string(), fp(self.drive.frequency)),
            ("drive_phase".to_string(), fp(self.drive.phase)),
        ];
        let r0 = self.initial_bloch();
        out.push((
            "initial_bloch".to_string(),
            format!("{} {} {}", fp(r0.x), fp(r0.y), fp(r0.z)),
        ));
        if let Some(noise) = &self.noise {
            out.push(("noise_power".to_string(), fp(noise.power)));
            out.push(("noise_memory_time".to_string(), fp(noise.memory_time)));
        }
        if let Some(bath) = &self.bath {
            out.push(("bath_n_max".to_string(), bath.n_max.to_string()));
            for (i, m) in bath.modes.iter().enumerate() {
                out.push((
                    format!("bath_mode_{i}"),
                    format!("{} {} {}", fp(m.coupling), fp(m.frequency), fp(m.decay)),
                ));
            }
        }
        out.push(("t_max".to_string(), fp(self.grid.t_max)));
        out.push(("dt_out".to_string(), fp(self.grid.dt_out)));
        if let Some(mc) = &self.monte_carlo {
            out.push(("mc_n_traj".to_string(), mc.n_traj.to_string()));
            out.push(("mc_dt".to_string(), fp(mc.dt)));
        }
        out
    }
}
