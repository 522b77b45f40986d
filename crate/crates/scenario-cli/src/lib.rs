//! Config-driven runner that wires the solver crates together: it executes
//! any subset of the classical-dephasing and quantum-bath solvers on a
//! shared time grid, reports pairwise deviation metrics, gates the exit
//! code on configured thresholds, and emits deterministic CSV or JSON
//! time series.

pub mod compare;
pub mod config;
pub mod error;
pub mod output;
pub mod presets;
pub mod runner;
pub mod solvers;

pub use compare::{compare_series, threshold_measure, ComponentStats, DeviationReport};
pub use config::{
    BathConfig, ComponentSel, DriveConfig, FrameTag, GridConfig, McConfig, MetricKind,
    ModeConfig, NoiseConfig, OutputConfig, OutputFormat, QubitConfig, ScenarioConfig,
    ScenarioKind, SolverId, ThresholdConfig,
};
pub use error::CliError;
pub use output::{emit_timeseries, read_timeseries, render_csv, render_json, SeriesHeader, TimeSeries};
pub use presets::{preset_config, PresetName};
pub use runner::{run_scenario, PairReport, RunOptions, ScenarioSummary, ThresholdOutcome};
pub use solvers::{run_solver, SolverOutput};
