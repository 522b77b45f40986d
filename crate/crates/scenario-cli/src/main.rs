use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use scenario_cli::{
    compare_series, preset_config, read_timeseries, run_scenario, CliError, DeviationReport,
    OutputFormat, PresetName, RunOptions, ScenarioConfig, ScenarioSummary,
};

#[derive(Parser)]
#[command(
    name = "scenario-cli",
    version,
    about = "Runs driven-qubit solvers on a shared grid and compares their output"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct RunFlags {
    /// Output format (overrides the config).
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output directory (overrides the config).
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Worker threads for trajectory ensembles (default: one per CPU).
    #[arg(long)]
    threads: Option<usize>,
    /// Monte Carlo seed (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the scenario described by a TOML config file.
    Run {
        config: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Run a built-in scenario preset.
    Preset {
        #[arg(value_enum)]
        name: PresetName,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Compare two emitted time-series files on the same grid.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Standard-error series (same grid and frame as `a`/`b`);
        /// enables deviation-over-error z-scores.
        #[arg(long)]
        std_err: Option<PathBuf>,
    },
}

const COMPONENT_NAMES: [&str; 3] = ["r_x", "r_y", "r_z"];

fn print_report(report: &DeviationReport, indent: &str) {
    for (c, stats) in report.component.iter().enumerate() {
        print!(
            "{indent}{}: max-abs {:.3e} at t = {}, rms {:.3e}",
            COMPONENT_NAMES[c], stats.max_abs, stats.t_at_max, stats.rms
        );
        if let Some(z) = stats.max_z {
            print!(", max-z {z:.2}");
        }
        println!();
    }
    print!("{indent}overall: max-abs {:.3e}, rms {:.3e}", report.max_abs, report.rms);
    if let Some(z) = report.max_z {
        print!(", max-z {z:.2}");
    }
    println!();
}

fn print_summary(summary: &ScenarioSummary) {
    for (solver, message) in &summary.solver_errors {
        println!("solver {solver}: FAILED: {message}");
    }
    for pair in &summary.pair_reports {
        println!("pair {} vs {} ({} points):", pair.a, pair.b, pair.report.n_points);
        print_report(&pair.report, "  ");
    }
    for outcome in &summary.threshold_outcomes {
        let th = &outcome.threshold;
        let metric = match th.metric {
            scenario_cli::MetricKind::MaxAbs => "max-abs",
            scenario_cli::MetricKind::Rms => "rms",
            scenario_cli::MetricKind::ZScore => "z-score",
        };
        match outcome.measured {
            Some(measured) => println!(
                "threshold {} vs {} {metric} <= {:e}: {} (measured {measured:.3e})",
                th.a,
                th.b,
                th.limit,
                if outcome.violated { "FAIL" } else { "PASS" }
            ),
            None => println!(
                "threshold {} vs {} {metric} <= {:e}: SKIPPED (solver failed)",
                th.a, th.b, th.limit
            ),
        }
    }
    for file in &summary.files {
        println!("wrote {}", file.display());
    }
}

fn execute_run(cfg: &ScenarioConfig, flags: RunFlags) -> Result<i32, CliError> {
    let opts = RunOptions {
        out_dir: flags.out_dir,
        format: flags.format,
        seed: flags.seed,
        threads: flags.threads,
    };
    let summary = run_scenario(cfg, &opts)?;
    print_summary(&summary);
    Ok(summary.exit_code())
}

fn dispatch(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Run { config, flags } => {
            let cfg = ScenarioConfig::from_path(&config)?;
            execute_run(&cfg, flags)
        }
        Cmd::Preset { name, flags } => {
            let cfg = preset_config(name);
            execute_run(&cfg, flags)
        }
        Cmd::Compare { a, b, std_err } => {
            let series_a = read_timeseries(&a)?;
            let series_b = read_timeseries(&b)?;
            let se = std_err.map(|p| read_timeseries(&p)).transpose()?;
            let report = compare_series(&series_a, &series_b, se.as_ref())?;
            println!(
                "compare {} vs {} ({} points):",
                series_a.header.solver, series_b.header.solver, report.n_points
            );
            print_report(&report, "  ");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors; anything else is
            // an execution error under the exit-code contract (2 is
            // reserved for threshold violations).
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
