//! Built-in scenario configurations reproducing the reference comparisons.

use std::f64::consts::FRAC_PI_4;

use crate::config::{
    BathConfig, ComponentSel, DriveConfig, GridConfig, McConfig, MetricKind, ModeConfig,
    NoiseConfig, OutputConfig, OutputFormat, QubitConfig, ScenarioConfig, ScenarioKind, SolverId,
    ThresholdConfig, FrameTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PresetName {
    /// Weak resonant drive: exact kernel solution vs second-order
    /// time-local equation vs Monte Carlo.
    Fig2,
    /// Stronger drive: second- vs third-order time-local equations
    /// against the exact kernel solution.
    Fig3,
    /// Quantum bath with one damped mode: exact composite propagation
    /// vs second- and third-order time-local rate equations.
    Fig5,
}

impl PresetName {
    pub fn as_str(&self) -> &'static str {
        match self {
            PresetName::Fig2 => "fig2",
            PresetName::Fig3 => "fig3",
            PresetName::Fig5 => "fig5",
        }
    }
}

pub fn preset_config(name: PresetName) -> ScenarioConfig {
    match name {
        PresetName::Fig2 => ScenarioConfig {
            scenario: ScenarioKind::ClassicalDephasing,
            solvers: vec![SolverId::NovikovLaplace, SolverId::Tl2, SolverId::Mc],
            qubit: QubitConfig { omega: 1.0, initial_bloch: None },
            drive: DriveConfig { amplitude: 1e-2, frequency: 1.0, phase: FRAC_PI_4 },
            noise: Some(NoiseConfig { power: 4e-3, memory_time: 0.1 }),
            bath: None,
            grid: GridConfig { t_max: 1000.0, dt_out: 0.5 },
            monte_carlo: Some(McConfig { n_traj: 2000, dt: 0.01, seed: 7 }),
            output: OutputConfig {
                dir: "out/fig2".to_string(),
                format: OutputFormat::Csv,
                frames: Some(vec![FrameTag::Lab, FrameTag::Rotating]),
            },
            thresholds: vec![
                ThresholdConfig {
                    a: SolverId::Tl2,
                    b: SolverId::NovikovLaplace,
                    metric: MetricKind::MaxAbs,
                    component: ComponentSel::All,
                    limit: 2e-2,
                },
                ThresholdConfig {
                    a: SolverId::Mc,
                    b: SolverId::NovikovLaplace,
                    metric: MetricKind::ZScore,
                    component: ComponentSel::All,
                    limit: 6.0,
                },
            ],
        },
        PresetName::Fig3 => ScenarioConfig {
            scenario: ScenarioKind::ClassicalDephasing,
            solvers: vec![SolverId::NovikovLaplace, SolverId::Tl2, SolverId::Tl3],
            qubit: QubitConfig { omega: 1.0, initial_bloch: None },
            drive: DriveConfig { amplitude: 5e-2, frequency: 1.0, phase: FRAC_PI_4 },
            noise: Some(NoiseConfig { power: 4e-3, memory_time: 0.1 }),
            bath: None,
            grid: GridConfig { t_max: 1000.0, dt_out: 0.5 },
            monte_carlo: None,
            output: OutputConfig {
                dir: "out/fig3".to_string(),
                format: OutputFormat::Csv,
                frames: None,
            },
            thresholds: vec![
                ThresholdConfig {
                    a: SolverId::Tl2,
                    b: SolverId::NovikovLaplace,
                    metric: MetricKind::MaxAbs,
                    component: ComponentSel::All,
                    limit: 2e-2,
                },
                ThresholdConfig {
                    a: SolverId::Tl3,
                    b: SolverId::NovikovLaplace,
                    metric: MetricKind::MaxAbs,
                    component: ComponentSel::All,
                    limit: 2e-2,
                },
            ],
        },
        PresetName::Fig5 => ScenarioConfig {
            scenario: ScenarioKind::QuantumPm,
            solvers: vec![SolverId::PmExact, SolverId::Tcl2Q, SolverId::Tcl3Q],
            qubit: QubitConfig { omega: 1.0, initial_bloch: None },
            drive: DriveConfig { amplitude: 0.04, frequency: 1.0, phase: 0.0 },
            noise: None,
            bath: Some(BathConfig {
                n_max: 4,
                modes: vec![ModeConfig { coupling: 0.035, frequency: 0.75, decay: 0.02 }],
            }),
            grid: GridConfig { t_max: 400.0, dt_out: 0.2 },
            monte_carlo: None,
            output: OutputConfig {
                dir: "out/fig5".to_string(),
                format: OutputFormat::Csv,
                frames: None,
            },
            thresholds: vec![ThresholdConfig {
                a: SolverId::Tcl3Q,
                b: SolverId::PmExact,
                metric: MetricKind::MaxAbs,
                component: ComponentSel::All,
                limit: 0.1,
            }],
        },
    }
}
