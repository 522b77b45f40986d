//! Time-domain propagation of the exact non-local evolution equation via
//! its memory-extended constant-coefficient form.

use nalgebra::{DVector, Vector3};

use quantum_core::expm::expm_real;

use crate::error::LaplaceError;
use crate::resolvent::extended_generator;

/// Propagates the non-local equation on a uniform grid by augmenting the
/// Bloch vector with the exponentially weighted memory integral (initially
/// zero) and applying the exact matrix exponential of the extended
/// generator once per step.
pub fn novikov_extended_ode(
    delta: f64,
    d: f64,
    phi: f64,
    g: f64,
    tau: f64,
    r0: Vector3<f64>,
    t_grid: &[f64],
) -> Result<Vec<Vector3<f64>>, LaplaceError> {
    if t_grid.is_empty() {
        return Ok(Vec::new());
    }
    if t_grid.len() == 1 {
        return Ok(vec![r0]);
    }
    let dt = t_grid[1] - t_grid[0];
    if !(dt > 0.0) {
        return Err(LaplaceError::NonUniformGrid);
    }
    for w in t_grid.windows(2) {
        let step = w[1] - w[0];
        if (step - dt).abs() > 1e-9 * dt.max(1.0) {
            return Err(LaplaceError::NonUniformGrid);
        }
    }

    let b = extended_generator(delta, d, phi, g, tau);
    let step = expm_real(&(b * dt));

    let mut y = DVector::<f64>::zeros(6);
    for i in 0..3 {
        y[i] = r0[i];
    }
    let mut out = Vec::with_capacity(t_grid.len());
    out.push(r0);
    for _ in 1..t_grid.len() {
        y = &step * y;
        out.push(Vector3::new(y[0], y[1], y[2]));
    }
    Ok(out)
}
