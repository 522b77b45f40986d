//! Monte Carlo ensemble average over OU noise realizations.
//!
//! Each trajectory integrates `rdot = u(t) x r` with
//! `u(t) = v0 + v_drive(t) + 2 eta(t) v_c`, all axes read off the Hermitian
//! matrices via their Pauli decomposition. One step applies the exact
//! rotation about the midpoint axis, so single-trajectory norms are
//! preserved to roundoff and the only discretization error is the O(dt^2)
//! midpoint commutator error.

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use quantum_core::drive::DriveSpec;
use quantum_core::{pauli, CoreError};

use crate::error::NoiseError;
use crate::ou::{OUNoiseParams, OUStepper};

/// Trajectories per reduction block. Sums are accumulated sequentially
/// inside a block and blocks are merged in index order, so the result is
/// bitwise independent of the worker count.
const BLOCK: usize = 256;

#[derive(Debug, Clone)]
pub struct EnsembleResult {
    pub times: Vec<f64>,
    pub mean: Vec<Vector3<f64>>,
    pub std_err: Vec<Vector3<f64>>,
    pub n_traj: usize,
    /// Largest | |r| - |r0| | seen across all trajectories and steps.
    pub max_norm_dev: f64,
}

struct BlockSums {
    sum: Vec<Vector3<f64>>,
    sum_sq: Vec<Vector3<f64>>,
    max_norm_dev: f64,
}

/// Rotate `r` by angle `|u| dt` about `u` without forming the matrix.
#[inline]
fn rotate(r: Vector3<f64>, u: &Vector3<f64>, dt: f64) -> Vector3<f64> {
    let norm = u.norm();
    if norm == 0.0 {
        return r;
    }
    let axis = u / norm;
    let (s, c) = (norm * dt).sin_cos();
    r * c + axis.cross(&r) * s + axis * (axis.dot(&r) * (1.0 - c))
}

#[allow(clippy::too_many_arguments)]
pub fn mc_ensemble_average(
    h0: &Matrix2<Complex64>,
    drive: &DriveSpec,
    coupling: &Matrix2<Complex64>,
    r0: &Vector3<f64>,
    params: &OUNoiseParams,
    dt: f64,
    t_max: f64,
    n_traj: usize,
    seed: u64,
) -> Result<EnsembleResult, NoiseError> {
    for m in [h0, coupling] {
        let dev = pauli::hermiticity_error(m);
        if dev > 1e-12 {
            return Err(NoiseError::Core(CoreError::NonHermitian { deviation: dev }));
        }
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(NoiseError::InvalidParameter { name: "dt", value: dt });
    }
    if !t_max.is_finite() || t_max < 0.0 {
        return Err(NoiseError::InvalidParameter { name: "t_max", value: t_max });
    }
    if n_traj == 0 {
        return Err(NoiseError::InvalidParameter { name: "n_traj", value: 0.0 });
    }

    // H = a0 + (v/2).sigma generates rotation about v, so the Bloch axes
    // carry twice the Pauli vector parts; the scalar parts are pure phase.
    let (_, a_h0) = pauli::pauli_decompose(h0);
    let v0 = a_h0 * 2.0;
    let (_, a_c) = pauli::pauli_decompose(coupling);
    let vc = a_c * 2.0;

    let n_steps = (t_max / dt).round() as usize;
    let n_out = n_steps + 1;
    let times: Vec<f64> = (0..n_out).map(|k| k as f64 * dt).collect();

    // The OU state advances in half steps so the midpoint value is exact.
    let half_stepper = OUStepper::new(params, 0.5 * dt);

    let n_blocks = n_traj.div_ceil(BLOCK);
    let blocks: Vec<BlockSums> = (0..n_blocks)
        .into_par_iter()
        .map(|block| {
            let lo = block * BLOCK;
            let hi = (lo + BLOCK).min(n_traj);
            let mut sums = BlockSums {
                sum: vec![Vector3::zeros(); n_out],
                sum_sq: vec![Vector3::zeros(); n_out],
                max_norm_dev: 0.0,
            };
            let norm0 = r0.norm();
            for traj in lo..hi {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                rng.set_stream(traj as u64);
                let mut eta = half_stepper.initial(&mut rng);
                let mut r = *r0;
                record(&mut sums, 0, &r, norm0);
                for step in 0..n_steps {
                    let t_mid = (step as f64 + 0.5) * dt;
                    let eta_mid = half_stepper.advance(eta, &mut rng);
                    let u = v0 + drive.bloch_axis(t_mid) + vc * eta_mid;
                    r = rotate(r, &u, dt);
                    eta = half_stepper.advance(eta_mid, &mut rng);
                    record(&mut sums, step + 1, &r, norm0);
                }
            }
            sums
        })
        .collect();

    let mut sum = vec![Vector3::zeros(); n_out];
    let mut sum_sq = vec![Vector3::zeros(); n_out];
    let mut max_norm_dev = 0.0f64;
    for b in &blocks {
        for i in 0..n_out {
            sum[i] += b.sum[i];
            sum_sq[i] += b.sum_sq[i];
        }
        max_norm_dev = max_norm_dev.max(b.max_norm_dev);
    }

    let n = n_traj as f64;
    let mean: Vec<Vector3<f64>> = sum.iter().map(|s| s / n).collect();
    let std_err: Vec<Vector3<f64>> = if n_traj < 2 {
        vec![Vector3::zeros(); n_out]
    } else {
        sum_sq
            .iter()
            .zip(mean.iter())
            .map(|(sq, m)| {
                Vector3::from_fn(|i, _| {
                    let var = (sq[i] - n * m[i] * m[i]).max(0.0) / (n - 1.0);
                    (var / n).sqrt()
                })
            })
            .collect()
    };

    Ok(EnsembleResult { times, mean, std_err, n_traj, max_norm_dev })
}

#[inline]
fn record(sums: &mut BlockSums, idx: usize, r: &Vector3<f64>, norm0: f64) {
    sums.sum[idx] += r;
    sums.sum_sq[idx] += r.component_mul(r);
    sums.max_norm_dev = sums.max_norm_dev.max((r.norm() - norm0).abs());
}
