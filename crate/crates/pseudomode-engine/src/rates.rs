//! Time-dependent rates of the time-local master equation for a driven
//! qubit coupled to pseudo-modes.
//!
//! Both rates follow from the bath correlation function `c(t)`:
//!
//! * decay rate `Gamma(t) = int_0^t c(u) exp(i Omega u) du`, with `Omega`
//!   the qubit splitting;
//! * drive-bath cross rate `g(t) = int_0^t ds int_0^s du c(t - u) f(u)`,
//!   with `f` the complex drive envelope.
//!
//! For a monochromatic drive both integrals evaluate in closed form as sums
//! over modes. The quadrature builders compute the same objects from their
//! defining integrals and exist to cross-check the closed forms.

use num_complex::Complex64;

use quantum_core::drive::DriveSpec;
use quantum_core::quad::adaptive_gk;

use crate::bath::PseudoModeBath;
use crate::error::PseudoModeError;

/// `(exp(w) - 1) / w`, stable for small `|w|`.
fn phi1(w: Complex64) -> Complex64 {
    if w.norm() < 0.25 {
        // Truncated at w^14 / 15!; error below 1e-16 at |w| = 0.25.
        let mut term = Complex64::new(1.0, 0.0);
        let mut acc = term;
        for k in 2..=15 {
            term = term * w / k as f64;
            acc += term;
        }
        acc
    } else {
        (w.exp() - 1.0) / w
    }
}

/// `(exp(w) - 1 - w) / w^2`, stable for small `|w|`.
fn phi2(w: Complex64) -> Complex64 {
    if w.norm() < 0.25 {
        let mut term = Complex64::new(0.5, 0.0);
        let mut acc = term;
        for k in 3..=16 {
            term = term * w / k as f64;
            acc += term;
        }
        acc
    } else {
        (w.exp() - 1.0 - w) / (w * w)
    }
}

/// Closed-form decay rate
/// `Gamma(t) = sum_l eta_l^2 t phi1(lambda_l t)`,
/// `lambda_l = i (Omega - xi_l) - Gamma_l / 2`.
pub fn gamma_rate(bath: &PseudoModeBath, omega: f64, t: f64) -> Complex64 {
    bath.modes
        .iter()
        .map(|m| {
            let lambda = Complex64::new(-0.5 * m.decay, omega - m.frequency);
            m.coupling * m.coupling * t * phi1(lambda * t)
        })
        .sum()
}

/// Decay rate from its defining integral by adaptive quadrature.
pub fn gamma_rate_quadrature(
    bath: &PseudoModeBath,
    omega: f64,
    t: f64,
    tol: f64,
) -> Result<Complex64, PseudoModeError> {
    let value = adaptive_gk(
        &mut |u| bath.correlation(u) * (Complex64::i() * omega * u).exp(),
        0.0,
        t,
        tol,
    )?;
    Ok(value)
}

/// Closed-form drive-bath cross rate for a monochromatic drive:
/// `g(t) = sum_l eta_l^2 f(0) exp(-i xi_l t - Gamma_l t / 2) t^2 phi2(mu_l t)`,
/// `mu_l = i (xi_l - omega_drive) + Gamma_l / 2`.
pub fn g_rate(bath: &PseudoModeBath, drive: &DriveSpec, t: f64) -> Complex64 {
    let f0 = drive.envelope(0.0);
    bath.modes
        .iter()
        .map(|m| {
            let eta2 = m.coupling * m.coupling;
            let mu = Complex64::new(0.5 * m.decay, m.frequency - drive.frequency);
            let damp = (Complex64::new(-0.5 * m.decay, -m.frequency) * t).exp();
            eta2 * f0 * damp * (t * t) * phi2(mu * t)
        })
        .sum()
}

/// Cross rate from its defining nested integral by adaptive quadrature,
/// valid for any drive envelope.
pub fn g_rate_quadrature(
    bath: &PseudoModeBath,
    drive: &DriveSpec,
    t: f64,
    tol: f64,
) -> Result<Complex64, PseudoModeError> {
    if t == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let inner_tol = (0.1 * tol / t.abs().max(1.0)).max(1e-14);
    let mut inner_failure = None;
    let value = adaptive_gk(
        &mut |s| {
            match adaptive_gk(
                &mut |u| bath.correlation(t - u) * drive.envelope(u),
                0.0,
                s,
                inner_tol,
            ) {
                Ok(v) => v,
                Err(e) => {
                    inner_failure.get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        },
        0.0,
        t,
        tol,
    )?;
    if let Some(e) = inner_failure {
        return Err(e.into());
    }
    Ok(value)
}
