//! Dispatch from solver ids to the engine crates.
//!
//! Every solver reports on the shared scenario grid. Classical solvers
//! produce the co-rotating series natively (the comparison frame) plus a
//! lab-frame view; the Monte Carlo solver runs in the lab frame, where its
//! standard errors are native, and is rotated exactly. Quantum solvers
//! produce plain expectation values with no frame distinction.

use nalgebra::Vector3;
use num_complex::Complex64;

use laplace_bench::{invert_rational, novikov_extended_ode, novikov_rational};
use noise_engine::{mc_ensemble_average, OUNoiseParams};
use pseudomode_engine::{
    pm_lindblad_propagate, tcl_bloch_propagate, PseudoMode, PseudoModeBath, RateOrder,
};
use quantum_core::drive::DriveSpec;
use quantum_core::ode::OdeOpts;
use quantum_core::pauli;
use tcl_engine::{propagate, rotating_frame_map, DephasingModel, Frame, FrameDirection, KernelMode, TclOrder};

use crate::config::{FrameTag, ScenarioConfig, SolverId};
use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct SolverOutput {
    pub solver: SolverId,
    pub times: Vec<f64>,
    /// Series in the comparison frame: co-rotating for the classical
    /// scenario, plain expectation values for the quantum one.
    pub values: Vec<Vector3<f64>>,
    /// Lab-frame view; present for classical solvers only.
    pub values_lab: Option<Vec<Vector3<f64>>>,
    /// Monte Carlo standard errors (lab frame).
    pub std_err_lab: Option<Vec<Vector3<f64>>>,
}

impl SolverOutput {
    /// Series for an emission frame: `None` = frame-free (quantum).
    pub fn frame_values(&self, frame: Option<FrameTag>) -> Option<&Vec<Vector3<f64>>> {
        match frame {
            None => Some(&self.values),
            Some(FrameTag::Rotating) => self.values_lab.is_some().then_some(&self.values),
            Some(FrameTag::Lab) => self.values_lab.as_ref(),
        }
    }
}

fn solver_err(id: SolverId, e: impl std::fmt::Display) -> CliError {
    CliError::Solver { solver: id.to_string(), message: e.to_string() }
}

fn tight_opts() -> OdeOpts {
    OdeOpts { rtol: 1e-10, atol: 1e-13, ..OdeOpts::default() }
}

fn classical_model(cfg: &ScenarioConfig, id: SolverId) -> Result<DephasingModel, CliError> {
    let noise = cfg.noise.as_ref().expect("validated classical config has noise");
    let params =
        OUNoiseParams::new(noise.power, noise.memory_time).map_err(|e| solver_err(id, e))?;
    Ok(DephasingModel {
        omega: cfg.qubit.omega,
        drive: DriveSpec::new(cfg.drive.amplitude, cfg.drive.frequency, cfg.drive.phase),
        noise: params,
    })
}

fn to_lab(values: &[Vector3<f64>], times: &[f64], omega_drive: f64) -> Vec<Vector3<f64>> {
    values
        .iter()
        .zip(times)
        .map(|(r, t)| rotating_frame_map(r, *t, omega_drive, FrameDirection::ToLab))
        .collect()
}

fn run_classical(
    cfg: &ScenarioConfig,
    id: SolverId,
    t_grid: &[f64],
    seed_override: Option<u64>,
) -> Result<SolverOutput, CliError> {
    let model = classical_model(cfg, id)?;
    let r0 = cfg.initial_bloch();
    let delta = model.detuning();
    let (d, phi) = (cfg.drive.amplitude, cfg.drive.phase);
    let noise = cfg.noise.as_ref().expect("validated classical config has noise");
    let (g, tau) = (noise.power, noise.memory_time);

    match id {
        SolverId::Tl2 | SolverId::Tl3 => {
            let order = if id == SolverId::Tl2 { TclOrder::Second } else { TclOrder::Third };
            let values = propagate(
                &model,
                order,
                Frame::Rotating,
                KernelMode::Transient,
                &r0,
                t_grid,
                &tight_opts(),
            )
            .map_err(|e| solver_err(id, e))?;
            let values_lab = to_lab(&values, t_grid, model.drive.frequency);
            Ok(SolverOutput {
                solver: id,
                times: t_grid.to_vec(),
                values,
                values_lab: Some(values_lab),
                std_err_lab: None,
            })
        }
        SolverId::NovikovOde => {
            let values = novikov_extended_ode(delta, d, phi, g, tau, r0, t_grid)
                .map_err(|e| solver_err(id, e))?;
            let values_lab = to_lab(&values, t_grid, model.drive.frequency);
            Ok(SolverOutput {
                solver: id,
                times: t_grid.to_vec(),
                values,
                values_lab: Some(values_lab),
                std_err_lab: None,
            })
        }
        SolverId::NovikovLaplace => {
            let rationals =
                novikov_rational(delta, d, phi, g, tau, r0).map_err(|e| solver_err(id, e))?;
            let mut forms = Vec::with_capacity(3);
            for rf in &rationals {
                forms.push(invert_rational(rf).map_err(|e| solver_err(id, e))?);
            }
            let values: Vec<Vector3<f64>> = t_grid
                .iter()
                .map(|t| Vector3::new(forms[0].eval(*t), forms[1].eval(*t), forms[2].eval(*t)))
                .collect();
            let values_lab = to_lab(&values, t_grid, model.drive.frequency);
            Ok(SolverOutput {
                solver: id,
                times: t_grid.to_vec(),
                values,
                values_lab: Some(values_lab),
                std_err_lab: None,
            })
        }
        SolverId::Mc => {
            let mc = cfg.monte_carlo.as_ref().expect("validated config has monte_carlo");
            let seed = seed_override.unwrap_or(mc.seed);
            let h0 = pauli::sigma_z() * Complex64::new(0.5 * cfg.qubit.omega, 0.0);
            let t_end = *t_grid.last().expect("grid is non-empty");
            let ensemble = mc_ensemble_average(
                &h0,
                &model.drive,
                &pauli::sigma_z(),
                &r0,
                &model.noise,
                mc.dt,
                t_end,
                mc.n_traj,
                seed,
            )
            .map_err(|e| solver_err(id, e))?;

            let stride = (cfg.grid.dt_out / mc.dt).round() as usize;
            let mut values_lab = Vec::with_capacity(t_grid.len());
            let mut std_err = Vec::with_capacity(t_grid.len());
            for (k, t) in t_grid.iter().enumerate() {
                let idx = k * stride;
                let fine_t = ensemble.times.get(idx).copied().ok_or_else(|| {
                    solver_err(id, format!("trajectory grid ends before t = {t}"))
                })?;
                if (fine_t - t).abs() > 1e-9 * t.max(1.0) {
                    return Err(solver_err(
                        id,
                        format!("trajectory grid point {fine_t} does not match output point {t}"),
                    ));
                }
                values_lab.push(ensemble.mean[idx]);
                std_err.push(ensemble.std_err[idx]);
            }
            let values = values_lab
                .iter()
                .zip(t_grid)
                .map(|(r, t)| {
                    rotating_frame_map(r, *t, model.drive.frequency, FrameDirection::ToRotating)
                })
                .collect();
            Ok(SolverOutput {
                solver: id,
                times: t_grid.to_vec(),
                values,
                values_lab: Some(values_lab),
                std_err_lab: Some(std_err),
            })
        }
        _ => unreachable!("classical dispatch called with {id}"),
    }
}

fn run_quantum(
    cfg: &ScenarioConfig,
    id: SolverId,
    t_grid: &[f64],
) -> Result<SolverOutput, CliError> {
    let bath_cfg = cfg.bath.as_ref().expect("validated quantum config has bath");
    let modes: Vec<PseudoMode> = bath_cfg
        .modes
        .iter()
        .map(|m| PseudoMode { coupling: m.coupling, frequency: m.frequency, decay: m.decay })
        .collect();
    let bath =
        PseudoModeBath::from_modes(modes, bath_cfg.n_max).map_err(|e| solver_err(id, e))?;
    let drive = DriveSpec::new(cfg.drive.amplitude, cfg.drive.frequency, cfg.drive.phase);
    let r0 = cfg.initial_bloch();

    let values = match id {
        SolverId::PmExact => {
            pm_lindblad_propagate(&bath, cfg.qubit.omega, &drive, &r0, t_grid, &tight_opts())
                .map_err(|e| solver_err(id, e))?
                .bloch
        }
        SolverId::Tcl2Q | SolverId::Tcl3Q => {
            let order = if id == SolverId::Tcl2Q { RateOrder::Second } else { RateOrder::Third };
            tcl_bloch_propagate(&bath, cfg.qubit.omega, &drive, order, &r0, t_grid, &tight_opts())
                .map_err(|e| solver_err(id, e))?
        }
        _ => unreachable!("quantum dispatch called with {id}"),
    };
    Ok(SolverOutput {
        solver: id,
        times: t_grid.to_vec(),
        values,
        values_lab: None,
        std_err_lab: None,
    })
}

/// Runs one solver on the shared grid. `seed_override` replaces the
/// configured Monte Carlo seed when given.
pub fn run_solver(
    cfg: &ScenarioConfig,
    id: SolverId,
    t_grid: &[f64],
    seed_override: Option<u64>,
) -> Result<SolverOutput, CliError> {
    match id {
        SolverId::Mc
        | SolverId::NovikovLaplace
        | SolverId::NovikovOde
        | SolverId::Tl2
        | SolverId::Tl3 => run_classical(cfg, id, t_grid, seed_override),
        SolverId::PmExact | SolverId::Tcl2Q | SolverId::Tcl3Q => run_quantum(cfg, id, t_grid),
    }
}
