//! Time-local Bloch equation of motion built from the pseudo-mode rates.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use quantum_core::drive::DriveSpec;
use quantum_core::ode::{integrate_real3, OdeOpts};
use quantum_core::superop::AffineBloch;

use crate::bath::PseudoModeBath;
use crate::error::PseudoModeError;
use crate::rates::{g_rate, gamma_rate};

/// Which rates enter the time-local generator: second order keeps only the
/// decay rate; third order adds the drive-bath cross rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateOrder {
    Second,
    Third,
}

/// Affine Bloch generator `rdot = M r + b` at one instant, assembled from
/// the splitting `Omega`, drive envelope `f`, decay rate `Gamma` and cross
/// rate `g`. `Re Gamma` damps, `Im Gamma` shifts the precession frequency;
/// the cross rate enters only the longitudinal row of `M` and the
/// transverse components of `b`.
pub fn driven_tcl_generator(
    omega: f64,
    f: Complex64,
    gamma: Complex64,
    g: Complex64,
) -> AffineBloch {
    let m = Matrix3::new(
        -gamma.re,
        -(omega + gamma.im),
        -2.0 * f.im,
        omega + gamma.im,
        -gamma.re,
        -2.0 * f.re,
        2.0 * (f.im + g.im),
        2.0 * (f.re + g.re),
        -2.0 * gamma.re,
    );
    let b = Vector3::new(2.0 * g.im, 2.0 * g.re, -2.0 * gamma.re);
    AffineBloch { m, b }
}

/// Propagate the qubit Bloch vector under the time-local generator with
/// closed-form rates.
pub fn tcl_bloch_propagate(
    bath: &PseudoModeBath,
    omega: f64,
    drive: &DriveSpec,
    order: RateOrder,
    r0: &Vector3<f64>,
    t_grid: &[f64],
    opts: &OdeOpts,
) -> Result<Vec<Vector3<f64>>, PseudoModeError> {
    let out = integrate_real3(
        &mut |t, r: &Vector3<f64>| {
            let gamma = gamma_rate(bath, omega, t);
            let g = match order {
                RateOrder::Second => Complex64::new(0.0, 0.0),
                RateOrder::Third => g_rate(bath, drive, t),
            };
            driven_tcl_generator(omega, drive.envelope(t), gamma, g).apply(r)
        },
        *r0,
        t_grid,
        opts,
    )?;
    Ok(out)
}
