//! Config, serialization, comparison, and end-to-end CLI behavior.

use std::path::{Path, PathBuf};
use std::process::Command;

use nalgebra::Vector3;

use scenario_cli::{
    compare_series, preset_config, read_timeseries, render_csv, run_scenario, run_solver,
    threshold_measure, CliError, ComponentSel, ComponentStats, DeviationReport, DriveConfig,
    FrameTag, GridConfig, McConfig, MetricKind, NoiseConfig, OutputConfig, OutputFormat,
    PresetName, QubitConfig, RunOptions, ScenarioConfig, ScenarioKind, SeriesHeader, SolverId,
    ThresholdConfig, TimeSeries,
};

fn tmp_dir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).expect("create temp dir");
    dir
}

fn classical_base() -> ScenarioConfig {
    ScenarioConfig {
        scenario: ScenarioKind::ClassicalDephasing,
        solvers: vec![SolverId::Tl2, SolverId::NovikovOde],
        qubit: QubitConfig { omega: 1.0, initial_bloch: None },
        drive: DriveConfig { amplitude: 0.3, frequency: 1.0, phase: 0.4 },
        noise: Some(NoiseConfig { power: 0.1, memory_time: 0.5 }),
        bath: None,
        grid: GridConfig { t_max: 10.0, dt_out: 0.5 },
        monte_carlo: None,
        output: OutputConfig::default(),
        thresholds: vec![],
    }
}

fn plain_header(solver: &str, frame: Option<FrameTag>) -> SeriesHeader {
    SeriesHeader {
        solver: solver.to_string(),
        version: "test".to_string(),
        frame,
        seed: None,
        params: vec![("omega".to_string(), "1.0".to_string())],
    }
}

#[test]
fn preset_parameters_match_reference_scenarios() {
    let fig2 = preset_config(PresetName::Fig2);
    assert_eq!(fig2.scenario, ScenarioKind::ClassicalDephasing);
    assert_eq!(fig2.solvers, vec![SolverId::NovikovLaplace, SolverId::Tl2, SolverId::Mc]);
    assert_eq!(fig2.drive.amplitude, 1e-2);
    assert_eq!(fig2.drive.frequency, 1.0);
    assert_eq!(fig2.drive.phase, std::f64::consts::FRAC_PI_4);
    let noise = fig2.noise.expect("classical preset has noise");
    assert_eq!(noise.power, 4e-3);
    assert_eq!(noise.memory_time, 0.1);
    assert_eq!(fig2.initial_bloch(), Vector3::new(0.0, 0.0, 1.0));
    assert_eq!(
        fig2.output.frames,
        Some(vec![FrameTag::Lab, FrameTag::Rotating]),
        "the weak-drive preset emits both frames"
    );

    let fig3 = preset_config(PresetName::Fig3);
    assert_eq!(fig3.solvers, vec![SolverId::NovikovLaplace, SolverId::Tl2, SolverId::Tl3]);
    assert_eq!(fig3.drive.amplitude, 5e-2);
    let noise = fig3.noise.expect("classical preset has noise");
    assert_eq!(noise.power, 4e-3);
    assert_eq!(noise.memory_time, 0.1);

    let fig5 = preset_config(PresetName::Fig5);
    assert_eq!(fig5.scenario, ScenarioKind::QuantumPm);
    assert_eq!(fig5.solvers, vec![SolverId::PmExact, SolverId::Tcl2Q, SolverId::Tcl3Q]);
    assert_eq!(fig5.qubit.omega, 1.0);
    assert_eq!(fig5.drive.amplitude, 0.04);
    assert_eq!(fig5.drive.frequency, 1.0, "the quantum drive is resonant");
    let bath = fig5.bath.as_ref().expect("quantum preset has a bath");
    assert_eq!(bath.modes.len(), 1);
    assert_eq!(bath.modes[0].coupling, 0.035);
    assert_eq!(bath.modes[0].frequency, 0.75);
    assert_eq!(bath.modes[0].decay, 0.02);
    assert_eq!(bath.n_max, 4);
    assert_eq!(fig5.initial_bloch(), Vector3::new(0.0, 0.0, -1.0), "ground-state start");

    for preset in [PresetName::Fig2, PresetName::Fig3, PresetName::Fig5] {
        preset_config(preset).validate().expect("presets validate");
    }
}

#[test]
fn sample_config_files_reproduce_the_presets() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    for (file, preset) in [
        ("fig2.toml", PresetName::Fig2),
        ("fig3.toml", PresetName::Fig3),
        ("fig5.toml", PresetName::Fig5),
    ] {
        let path = dir.join(file);
        let cfg = ScenarioConfig::from_path(&path)
            .unwrap_or_else(|e| panic!("{file} should parse: {e}"));
        assert_eq!(cfg, preset_config(preset), "{file} drifted from the built-in preset");
    }
}

#[test]
fn config_round_trips_through_toml() {
    for preset in [PresetName::Fig2, PresetName::Fig3, PresetName::Fig5] {
        let cfg = preset_config(preset);
        let text = toml::to_string(&cfg).expect("config serializes");
        let back: ScenarioConfig = toml::from_str(&text).expect("config parses back");
        assert_eq!(back, cfg);
    }
}

#[test]
fn misconfigurations_are_rejected_with_field_messages() {
    let expect_field = |cfg: &ScenarioConfig, field: &str| {
        let err = cfg.validate().expect_err(&format!("expected `{field}` to be rejected"));
        let msg = err.to_string();
        assert!(msg.contains(field), "error `{msg}` does not name `{field}`");
    };

    let mut cfg = classical_base();
    cfg.solvers = vec![];
    expect_field(&cfg, "solvers");

    let mut cfg = classical_base();
    cfg.solvers = vec![SolverId::Tl2, SolverId::Tl2];
    expect_field(&cfg, "solvers");

    let mut cfg = classical_base();
    cfg.solvers.push(SolverId::PmExact);
    expect_field(&cfg, "solvers");

    let mut cfg = classical_base();
    cfg.noise = None;
    expect_field(&cfg, "noise");

    let mut cfg = classical_base();
    cfg.noise.as_mut().unwrap().memory_time = 0.0;
    expect_field(&cfg, "noise.memory_time");

    let mut cfg = classical_base();
    cfg.solvers.push(SolverId::Mc);
    expect_field(&cfg, "monte_carlo");

    let mut cfg = classical_base();
    cfg.solvers.push(SolverId::Mc);
    cfg.monte_carlo = Some(McConfig { n_traj: 16, dt: 0.3, seed: 0 });
    expect_field(&cfg, "monte_carlo.dt"); // dt_out = 0.5 is not a multiple

    let mut cfg = classical_base();
    cfg.grid.dt_out = 0.3; // t_max = 10 is not a whole number of steps
    expect_field(&cfg, "grid.dt_out");

    let mut cfg = classical_base();
    cfg.qubit.initial_bloch = Some([1.0, 1.0, 1.0]);
    expect_field(&cfg, "qubit.initial_bloch");

    let mut cfg = classical_base();
    cfg.thresholds = vec![ThresholdConfig {
        a: SolverId::Tl2,
        b: SolverId::Tl3, // not in the solver list
        metric: MetricKind::MaxAbs,
        component: ComponentSel::All,
        limit: 1.0,
    }];
    expect_field(&cfg, "thresholds[0].b");

    let mut cfg = classical_base();
    cfg.thresholds = vec![ThresholdConfig {
        a: SolverId::Tl2,
        b: SolverId::NovikovOde,
        metric: MetricKind::ZScore, // neither side is mc
        component: ComponentSel::All,
        limit: 3.0,
    }];
    expect_field(&cfg, "thresholds[0].metric");

    let mut cfg = preset_config(PresetName::Fig5);
    cfg.output.frames = Some(vec![FrameTag::Rotating]);
    expect_field(&cfg, "output.frames");
}

#[test]
fn csv_round_trip_is_bit_exact() {
    let times = vec![0.0, 0.1 + 0.2, 1.0 / 3.0, 1e300];
    let values = vec![
        Vector3::new(1.0 / 3.0, -0.1, 5e-324),
        Vector3::new(std::f64::consts::PI * 1e-20, 0.3, -2.0 / 7.0),
        Vector3::new(1.0, -1.0, 0.0),
        Vector3::new(-1e-300, 9.999999999999999e-1, 2.225073858507201e-308),
    ];
    let series = TimeSeries::new(
        plain_header("tl2", Some(FrameTag::Rotating)),
        times.clone(),
        values.clone(),
    );
    let dir = tmp_dir("csv-round-trip");
    let path = dir.join("series.csv");
    scenario_cli::emit_timeseries(&series, &path, OutputFormat::Csv).expect("emit");
    let back = read_timeseries(&path).expect("read back");

    assert_eq!(back.header.solver, "tl2");
    assert_eq!(back.header.frame, Some(FrameTag::Rotating));
    assert_eq!(back.header.params, series.header.params);
    assert_eq!(back.times.len(), times.len());
    for (a, b) in back.times.iter().zip(&times) {
        assert_eq!(a.to_bits(), b.to_bits(), "time {b} did not round-trip");
    }
    for (a, b) in back.values.iter().zip(&values) {
        for c in 0..3 {
            assert_eq!(a[c].to_bits(), b[c].to_bits(), "value {} did not round-trip", b[c]);
        }
    }

    // Emission is byte-deterministic.
    let again = render_csv(&series);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), again);
}

#[test]
fn json_round_trip_is_bit_exact() {
    let times = vec![0.0, 2.0 / 3.0];
    let values = vec![
        Vector3::new(0.1, 0.2, 0.30000000000000004),
        Vector3::new(-5e-324, 1e308, -1.0 / 3.0),
    ];
    let mut header = plain_header("mc", Some(FrameTag::Lab));
    header.seed = Some(7);
    let series = TimeSeries::new(header, times.clone(), values.clone());
    let dir = tmp_dir("json-round-trip");
    let path = dir.join("series.json");
    scenario_cli::emit_timeseries(&series, &path, OutputFormat::Json).expect("emit");
    let back = read_timeseries(&path).expect("read back");

    assert_eq!(back.header.seed, Some(7));
    assert_eq!(back.header.frame, Some(FrameTag::Lab));
    for (a, b) in back.times.iter().zip(&times) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
    for (a, b) in back.values.iter().zip(&values) {
        for c in 0..3 {
            assert_eq!(a[c].to_bits(), b[c].to_bits());
        }
    }
}

#[test]
fn empty_series_produces_header_only_output() {
    let series = TimeSeries::new(plain_header("tl2", None), vec![], vec![]);
    let text = render_csv(&series);
    assert!(!text.is_empty());
    for line in text.lines() {
        assert!(line.starts_with('#'), "unexpected data line in empty series: {line}");
    }

    let dir = tmp_dir("empty-series");
    let path = dir.join("empty.csv");
    scenario_cli::emit_timeseries(&series, &path, OutputFormat::Csv).expect("emit");
    let back = read_timeseries(&path).expect("read back");
    assert_eq!(back.times.len(), 0);
    assert_eq!(back.header.solver, "tl2");
}

#[test]
fn identical_series_produce_a_zero_report() {
    let times: Vec<f64> = (0..50).map(|k| k as f64 * 0.1).collect();
    let values: Vec<Vector3<f64>> =
        times.iter().map(|t| Vector3::new(t.cos(), t.sin(), 0.5)).collect();
    let a = TimeSeries::new(plain_header("tl2", None), times.clone(), values.clone());
    let b = TimeSeries::new(plain_header("tl3", None), times, values);
    let report = compare_series(&a, &b, None).expect("compare");
    assert_eq!(report.max_abs, 0.0);
    assert_eq!(report.rms, 0.0);
    for c in 0..3 {
        assert_eq!(report.component[c].max_abs, 0.0);
        assert_eq!(report.component[c].rms, 0.0);
    }
    assert!(report.max_z.is_none());
}

#[test]
fn grid_mismatch_is_rejected() {
    let a = TimeSeries::new(
        plain_header("tl2", None),
        vec![0.0, 1.0],
        vec![Vector3::zeros(), Vector3::zeros()],
    );
    let b = TimeSeries::new(
        plain_header("tl3", None),
        vec![0.0, 2.0],
        vec![Vector3::zeros(), Vector3::zeros()],
    );
    assert!(matches!(compare_series(&a, &b, None), Err(CliError::GridMismatch(_))));

    let c = TimeSeries::new(plain_header("tl3", None), vec![0.0], vec![Vector3::zeros()]);
    assert!(matches!(compare_series(&a, &c, None), Err(CliError::GridMismatch(_))));
}

#[test]
fn frame_mismatch_is_rejected() {
    let a = TimeSeries::new(
        plain_header("tl2", Some(FrameTag::Lab)),
        vec![0.0],
        vec![Vector3::zeros()],
    );
    let b = TimeSeries::new(
        plain_header("tl3", Some(FrameTag::Rotating)),
        vec![0.0],
        vec![Vector3::zeros()],
    );
    assert!(matches!(compare_series(&a, &b, None), Err(CliError::FrameMismatch(_, _))));
}

#[test]
fn standard_errors_scale_the_z_score() {
    let times = vec![0.0, 1.0];
    let a = TimeSeries::new(
        plain_header("mc", None),
        times.clone(),
        vec![Vector3::new(0.0, 0.0, 1.0), Vector3::new(1.3, 0.0, 0.0)],
    );
    let b = TimeSeries::new(
        plain_header("novikov-ode", None),
        times.clone(),
        vec![Vector3::new(0.0, 0.0, 1.0), Vector3::new(1.0, 0.0, 0.0)],
    );
    // Zero errors at the deterministic first point, finite afterwards.
    let se = TimeSeries::new(
        plain_header("mc-std-err", None),
        times,
        vec![Vector3::zeros(), Vector3::new(0.1, 0.1, 0.1)],
    );
    let report = compare_series(&a, &b, Some(&se)).expect("compare");
    let z = report.max_z.expect("z-scores present");
    assert!((z - 3.0).abs() < 1e-9, "z = {z}");
    assert!((report.component[0].max_z.unwrap() - 3.0).abs() < 1e-9);
    assert_eq!(report.component[1].max_z.unwrap(), 0.0);
}

#[test]
fn threshold_selection_picks_metric_and_component() {
    let stats = |max_abs: f64, rms: f64| ComponentStats {
        max_abs,
        t_at_max: 0.0,
        rms,
        max_z: Some(max_abs * 10.0),
    };
    let report = DeviationReport {
        n_points: 10,
        component: [stats(0.1, 0.01), stats(0.2, 0.02), stats(0.3, 0.03)],
        max_abs: 0.3,
        rms: 0.02,
        max_z: Some(3.0),
    };
    let th = |metric, component| ThresholdConfig {
        a: SolverId::Mc,
        b: SolverId::Tl2,
        metric,
        component,
        limit: 1.0,
    };
    assert_eq!(threshold_measure(&report, &th(MetricKind::MaxAbs, ComponentSel::All)), 0.3);
    assert_eq!(threshold_measure(&report, &th(MetricKind::MaxAbs, ComponentSel::X)), 0.1);
    assert_eq!(threshold_measure(&report, &th(MetricKind::Rms, ComponentSel::Y)), 0.02);
    assert_eq!(threshold_measure(&report, &th(MetricKind::Rms, ComponentSel::All)), 0.02);
    assert_eq!(threshold_measure(&report, &th(MetricKind::ZScore, ComponentSel::Z)), 3.0);
    assert_eq!(threshold_measure(&report, &th(MetricKind::ZScore, ComponentSel::All)), 3.0);

    let bare = DeviationReport {
        n_points: 10,
        component: [stats(0.1, 0.01), stats(0.2, 0.02), stats(0.3, 0.03)]
            .map(|mut s| {
                s.max_z = None;
                s
            }),
        max_abs: 0.3,
        rms: 0.02,
        max_z: None,
    };
    assert!(threshold_measure(&bare, &th(MetricKind::ZScore, ComponentSel::All)).is_infinite());
}

#[test]
fn ensemble_seed_controls_reproducibility() {
    let mut cfg = classical_base();
    cfg.solvers = vec![SolverId::Mc];
    cfg.grid = GridConfig { t_max: 5.0, dt_out: 0.5 };
    cfg.monte_carlo = Some(McConfig { n_traj: 32, dt: 0.1, seed: 1 });
    cfg.validate().expect("valid");
    let grid = cfg.time_grid();

    let a = run_solver(&cfg, SolverId::Mc, &grid, None).expect("mc run");
    let b = run_solver(&cfg, SolverId::Mc, &grid, None).expect("mc run");
    let c = run_solver(&cfg, SolverId::Mc, &grid, Some(2)).expect("mc run");

    for (ra, rb) in a.values.iter().zip(&b.values) {
        for i in 0..3 {
            assert_eq!(ra[i].to_bits(), rb[i].to_bits(), "same seed must be bit-identical");
        }
    }
    let differs = a
        .values
        .iter()
        .zip(&c.values)
        .any(|(ra, rc)| (0..3).any(|i| ra[i] != rc[i]));
    assert!(differs, "a different seed must change the ensemble");
    assert!(a.std_err_lab.is_some(), "ensemble output carries standard errors");
}

#[test]
fn scenario_run_reports_pairs_and_emits_error_series() {
    let mut cfg = classical_base();
    cfg.solvers = vec![SolverId::Mc, SolverId::NovikovOde];
    cfg.grid = GridConfig { t_max: 5.0, dt_out: 0.5 };
    cfg.monte_carlo = Some(McConfig { n_traj: 64, dt: 0.1, seed: 3 });
    let dir = tmp_dir("scenario-run");
    let opts = RunOptions { out_dir: Some(dir.clone()), ..RunOptions::default() };
    let summary = run_scenario(&cfg, &opts).expect("run");

    assert!(summary.solver_errors.is_empty());
    assert_eq!(summary.pair_reports.len(), 1);
    let report = &summary.pair_reports[0].report;
    assert!(report.max_z.is_some(), "Monte Carlo pair carries z-scores");
    assert!(report.max_abs > 0.0);

    let se_file = dir.join("mc-std-err.csv");
    assert!(summary.files.contains(&se_file));
    let se = read_timeseries(&se_file).expect("standard-error series parses");
    assert_eq!(se.header.solver, "mc-std-err");
    assert_eq!(se.header.frame, Some(FrameTag::Lab));
    assert_eq!(se.times.len(), cfg.time_grid().len());
    // The ensemble spread is zero at t = 0 and positive afterwards.
    assert_eq!(se.values[0], Vector3::zeros());
    assert!(se.values.last().unwrap().iter().all(|&c| c > 0.0));
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scenario-cli"))
}

fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).expect("write config");
    path
}

const TINY_CLASSICAL: &str = r#"
scenario = "classical-dephasing"
solvers = ["tl2", "novikov-ode"]

[qubit]
omega = 1.0

[drive]
amplitude = 0.3
frequency = 1.0
phase = 0.4

[noise]
power = 0.1
memory_time = 0.5

[grid]
t_max = 10.0
dt_out = 0.5
"#;

#[test]
fn run_subcommand_writes_files_and_honors_the_exit_contract() {
    let dir = tmp_dir("cli-run");

    // Generous threshold: exit 0 and both series are emitted.
    let passing = format!(
        "{TINY_CLASSICAL}
[[thresholds]]
a = \"tl2\"
b = \"novikov-ode\"
metric = \"max-abs\"
limit = 0.5
"
    );
    let cfg = write_config(&dir, "passing.toml", &passing);
    let out_a = dir.join("out-a");
    let output = cli()
        .args(["run", cfg.to_str().unwrap(), "--out-dir", out_a.to_str().unwrap()])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("pair tl2 vs novikov-ode"), "summary missing: {stdout}");
    assert!(stdout.contains("PASS"));
    let series = read_timeseries(&out_a.join("tl2-rotating.csv")).expect("emitted file parses");
    assert_eq!(series.header.solver, "tl2");
    assert_eq!(series.header.frame, Some(FrameTag::Rotating));
    assert_eq!(series.times.len(), 21);
    assert!(series.header.params.iter().any(|(k, v)| k == "omega" && v.starts_with("1.")));

    // Impossible threshold: exit 2 (the two solvers are different
    // approximations, so their deviation is far above 1e-30).
    let failing = format!(
        "{TINY_CLASSICAL}
[[thresholds]]
a = \"tl2\"
b = \"novikov-ode\"
metric = \"max-abs\"
limit = 1e-30
"
    );
    let cfg = write_config(&dir, "failing.toml", &failing);
    let output = cli()
        .args(["run", cfg.to_str().unwrap(), "--out-dir", dir.join("out-b").to_str().unwrap()])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stdout).contains("FAIL"));

    // Config validation failure: exit 1 with the offending field named.
    let invalid = TINY_CLASSICAL.replace("\"tl2\", \"novikov-ode\"", "\"tl2\", \"mc\"");
    let cfg = write_config(&dir, "invalid.toml", &invalid);
    let output = cli().args(["run", cfg.to_str().unwrap()]).output().expect("spawn");
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("monte_carlo"));

    // Unknown field: exit 1 via the TOML parser.
    let unknown = format!("{TINY_CLASSICAL}\nunknown_knob = 3\n");
    let cfg = write_config(&dir, "unknown.toml", &unknown);
    let output = cli().args(["run", cfg.to_str().unwrap()]).output().expect("spawn");
    assert_eq!(output.status.code(), Some(1));

    // Missing file: exit 1.
    let output = cli().args(["run", dir.join("nope.toml").to_str().unwrap()]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn quantum_run_emits_frame_free_series() {
    let dir = tmp_dir("cli-quantum");
    let text = r#"
scenario = "quantum-pm"
solvers = ["pm-exact", "tcl2-q", "tcl3-q"]

[qubit]
omega = 1.0

[drive]
amplitude = 0.1
frequency = 1.0
phase = 0.0

[bath]
n_max = 2

[[bath.modes]]
coupling = 0.2
frequency = 0.9
decay = 0.1

[grid]
t_max = 5.0
dt_out = 0.5
"#;
    let cfg = write_config(&dir, "quantum.toml", text);
    let out = dir.join("out");
    let output = cli()
        .args(["run", cfg.to_str().unwrap(), "--out-dir", out.to_str().unwrap()])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&output.stderr));

    for name in ["pm-exact.csv", "tcl2-q.csv", "tcl3-q.csv"] {
        let series = read_timeseries(&out.join(name)).expect("quantum series parses");
        assert_eq!(series.header.frame, None, "{name} must be frame-free");
        assert_eq!(series.times.len(), 11);
        // Ground-state start by default.
        assert_eq!(series.values[0], Vector3::new(0.0, 0.0, -1.0));
    }

    // At these short times the time-local solutions track the exact one.
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("pair pm-exact vs tcl2-q"), "{stdout}");
}

#[test]
fn compare_subcommand_reports_deviations() {
    let dir = tmp_dir("cli-compare");
    let times = vec![0.0, 0.5, 1.0];
    let mk = |name: &str, offset: f64| {
        TimeSeries::new(
            plain_header(name, Some(FrameTag::Rotating)),
            times.clone(),
            times.iter().map(|t| Vector3::new(t + offset, 0.0, 1.0)).collect(),
        )
    };
    let a_path = dir.join("a.csv");
    let b_path = dir.join("b.csv");
    scenario_cli::emit_timeseries(&mk("tl2", 0.0), &a_path, OutputFormat::Csv).unwrap();
    scenario_cli::emit_timeseries(&mk("tl3", 0.25), &b_path, OutputFormat::Csv).unwrap();

    let output = cli()
        .args(["compare", a_path.to_str().unwrap(), b_path.to_str().unwrap()])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("max-abs 2.500e-1"), "unexpected report: {stdout}");

    // Error-aware mode via a standard-error file.
    let se_path = dir.join("se.csv");
    let se = TimeSeries::new(
        plain_header("mc-std-err", Some(FrameTag::Rotating)),
        times.clone(),
        times.iter().map(|_| Vector3::new(0.05, 0.05, 0.05)).collect(),
    );
    scenario_cli::emit_timeseries(&se, &se_path, OutputFormat::Csv).unwrap();
    let output = cli()
        .args([
            "compare",
            a_path.to_str().unwrap(),
            b_path.to_str().unwrap(),
            "--std-err",
            se_path.to_str().unwrap(),
        ])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stdout).contains("max-z 5.00"));

    // Mismatched grids are an execution error.
    let short = TimeSeries::new(
        plain_header("tl2", Some(FrameTag::Rotating)),
        vec![0.0],
        vec![Vector3::zeros()],
    );
    let short_path = dir.join("short.csv");
    scenario_cli::emit_timeseries(&short, &short_path, OutputFormat::Csv).unwrap();
    let output = cli()
        .args(["compare", a_path.to_str().unwrap(), short_path.to_str().unwrap()])
        .output()
        .expect("spawn");
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("grid"));
}
