//! Laplace transforms of r_z(t) from the excited state, rotating frame.
//!
//! All three transforms are independent of the drive phase; only the
//! detuning `delta`, drive amplitude `d`, and noise parameters enter. Each
//! has a direct complex evaluation and a cleared rational form; the rational
//! builders self-check against the direct form at fixed sample points so a
//! transcription slip in the coefficient algebra cannot survive silently.

use num_complex::Complex64;

use crate::error::LaplaceError;
use crate::poly::{Poly, RationalFunction};

/// Second-order time-local transform:
/// `[Delta^2 + (s+g)^2] / [s Delta^2 + (s+g)(D^2 + s(s+g))]`.
pub fn rz_tl2(delta: f64, d: f64, g: f64, s: Complex64) -> Complex64 {
    let sg = s + g;
    let d2 = delta * delta;
    (d2 + sg * sg) / (s * d2 + sg * (d * d + s * sg))
}

/// Third-order time-local transform; reduces to [`rz_tl2`] at `tau = 0`.
pub fn rz_tl3(delta: f64, d: f64, g: f64, tau: f64, s: Complex64) -> Complex64 {
    let sg = s + g;
    let d2 = delta * delta;
    let a = 1.0 + d2 * tau * tau;
    let det0 = s * d2 + sg * (d * d + s * sg);
    let num = a * (d2 + sg * sg);
    let den = a * det0 + g * d * d * tau * sg - g * d * d * d2 * tau * tau;
    num / den
}

/// Exact non-local transform for the OU kernel:
/// `[Delta^2 (1+s tau)^2 + q^2] / [s Delta^2 (1+s tau)^2 + q(D^2(1+s tau) + s q)]`
/// with `q = tau s^2 + s + g`.
pub fn rz_nonlocal(delta: f64, d: f64, g: f64, tau: f64, s: Complex64) -> Complex64 {
    let one_stau = 1.0 + s * tau;
    let q = tau * s * s + s + g;
    let d2 = delta * delta;
    let num = d2 * one_stau * one_stau + q * q;
    let den = s * d2 * one_stau * one_stau + q * (d * d * one_stau + s * q);
    num / den
}

fn self_check(
    rf: &RationalFunction,
    direct: &dyn Fn(Complex64) -> Complex64,
) -> Result<(), LaplaceError> {
    // Fixed sample points well away from any physical pole.
    let samples = [
        Complex64::new(0.731, 0.519),
        Complex64::new(1.92, -0.87),
        Complex64::new(0.143, 2.31),
        Complex64::new(3.77, 0.052),
        Complex64::new(0.66, -1.45),
    ];
    let mut worst = 0.0f64;
    for &s in &samples {
        let a = rf.eval(s);
        let b = direct(s);
        let dev = (a - b).norm() / b.norm().max(1e-30);
        worst = worst.max(dev);
    }
    if worst > 1e-12 {
        return Err(LaplaceError::SelfCheckFailed { deviation: worst });
    }
    Ok(())
}

/// Cleared rational form of [`rz_tl2`].
pub fn rational_tl2(delta: f64, d: f64, g: f64) -> Result<RationalFunction, LaplaceError> {
    let d2 = delta * delta;
    let rf = RationalFunction {
        num: Poly::from_real(&[d2 + g * g, 2.0 * g, 1.0]),
        den: Poly::from_real(&[g * d * d, d2 + d * d + g * g, 2.0 * g, 1.0]),
    };
    self_check(&rf, &|s| rz_tl2(delta, d, g, s))?;
    Ok(rf)
}

/// Cleared rational form of [`rz_tl3`].
pub fn rational_tl3(
    delta: f64,
    d: f64,
    g: f64,
    tau: f64,
) -> Result<RationalFunction, LaplaceError> {
    let d2 = delta * delta;
    let a = 1.0 + d2 * tau * tau;
    let num = Poly::from_real(&[a * (d2 + g * g), a * 2.0 * g, a]);
    let den = Poly::from_real(&[
        a * g * d * d + g * g * d * d * tau - g * d * d * d2 * tau * tau,
        a * (d2 + d * d + g * g) + g * d * d * tau,
        a * 2.0 * g,
        a,
    ]);
    let rf = RationalFunction { num, den };
    self_check(&rf, &|s| rz_tl3(delta, d, g, tau, s))?;
    Ok(rf)
}

/// Cleared rational form of [`rz_nonlocal`], built by polynomial algebra
/// from the same factors as the direct evaluation.
pub fn rational_nonlocal(
    delta: f64,
    d: f64,
    g: f64,
    tau: f64,
) -> Result<RationalFunction, LaplaceError> {
    let one_stau = Poly::from_real(&[1.0, tau]);
    let q = Poly::from_real(&[g, 1.0, tau]);
    let s_poly = Poly::from_real(&[0.0, 1.0]);
    let d2 = Complex64::new(delta * delta, 0.0);
    let dd = Complex64::new(d * d, 0.0);

    let one_stau_sq = one_stau.mul(&one_stau);
    let num = one_stau_sq.scale(d2).add(&q.mul(&q));
    let den = s_poly
        .mul(&one_stau_sq)
        .scale(d2)
        .add(&q.mul(&one_stau.scale(dd).add(&s_poly.mul(&q))));
    let rf = RationalFunction { num, den };
    self_check(&rf, &|s| rz_nonlocal(delta, d, g, tau, s))?;
    Ok(rf)
}
