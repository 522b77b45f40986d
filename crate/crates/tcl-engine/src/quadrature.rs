//! Generators built from their defining integrals in the tetradic
//! representation, with the statistical weight of every term written out.
//!
//! The expansion orders vertices around the static part of the Hamiltonian
//! alone (`H0 = (Omega/2) sigma_z` lab, `(Delta/2) sigma_z` rotating). The
//! deterministic drive and the noise both enter as vertices; each term's
//! coefficient is the joint cumulant of its vertex factors. A deterministic
//! factor has vanishing cumulants beyond first order and the noise has zero
//! mean, so at second order every drive-containing block carries weight
//! zero, and at third order only the (noise, noise, drive) combination
//! survives.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use noise_engine::OUNoiseParams;
use quantum_core::expm::unitary_evolution;
use quantum_core::quad::adaptive_gk;
use quantum_core::superop::{commutator_superop_unchecked, superop_to_bloch, AffineBloch};
use quantum_core::{pauli, CoreError};

use crate::model::{DephasingModel, Frame};

fn static_hamiltonian(model: &DephasingModel, frame: Frame) -> Matrix2<Complex64> {
    let splitting = match frame {
        Frame::Lab => model.omega,
        Frame::Rotating => model.detuning(),
    };
    pauli::sigma_z() * Complex64::new(0.5 * splitting, 0.0)
}

/// Tetradic representation of conjugation by `exp(-i H0 x)`.
fn free_conjugation(h0: &Matrix2<Complex64>, x: f64) -> Matrix4<Complex64> {
    let u = unitary_evolution(h0, x);
    u.map(|z| z.conj()).kronecker(&u)
}

fn drive_hamiltonian(model: &DephasingModel, frame: Frame, t: f64) -> Matrix2<Complex64> {
    match frame {
        Frame::Lab => model.drive.hamiltonian(t),
        // Static in the rotating frame: the t = 0 orientation.
        Frame::Rotating => model.drive.hamiltonian(0.0),
    }
}

/// Second-order generator from its defining integral.
///
/// `K2(t) = -Int_0^t ds sum_blocks w_block(s) V_a (E(s) V_b E(-s))`
/// where `V` are commutator superoperators of the vertex Hamiltonians and
/// `E` is the free conjugation. Block weights: (noise, noise) takes the
/// autocorrelation; every block containing the deterministic drive takes its
/// centered second cumulant, which is identically zero.
pub fn k2_generator_quadrature(
    model: &DephasingModel,
    frame: Frame,
    t: f64,
    tol: f64,
) -> Result<AffineBloch, CoreError> {
    let h0 = static_hamiltonian(model, frame);
    let v_noise = commutator_superop_unchecked(&pauli::sigma_z());

    let integrand = &mut |s: f64| -> Matrix4<Complex64> {
        let e_fwd = free_conjugation(&h0, s);
        let e_bwd = free_conjugation(&h0, -s);
        let back = |v: &Matrix4<Complex64>| e_fwd * v * e_bwd;

        let v_drive_outer = commutator_superop_unchecked(&drive_hamiltonian(model, frame, t));
        let v_drive_inner =
            commutator_superop_unchecked(&drive_hamiltonian(model, frame, t - s));

        let w_noise_noise = model.noise.autocorrelation(s);
        // <eta> = 0 kills both mixed blocks; the drive-drive block is the
        // centered second cumulant of a deterministic factor.
        let w_noise_drive = 0.0;
        let w_drive_noise = 0.0;
        let w_drive_drive = 0.0;

        let scale = |w: f64| Complex64::new(w, 0.0);
        v_noise * back(&v_noise) * scale(w_noise_noise)
            + v_noise * back(&v_drive_inner) * scale(w_noise_drive)
            + v_drive_outer * back(&v_noise) * scale(w_drive_noise)
            + v_drive_outer * back(&v_drive_inner) * scale(w_drive_drive)
    };

    let integral = adaptive_gk(integrand, 0.0, t, tol)?;
    Ok(superop_to_bloch(&(-integral)))
}

/// Third-order generator for an arbitrary drive Hamiltonian profile.
///
/// The surviving weight pairs the two noise vertices through the
/// autocorrelation, with the drive vertex in between; the inner lag
/// integral of the exponential kernel is carried out analytically:
/// `J(t, u) = Int_0^{t-u} C(u + v) dv = (g/4)(e^{-u/tau} - e^{-t/tau})`.
///
/// `K3(t) = i Int_0^t du J(t, u) [Vs X(u) Vs - Vs^2 X(u)]` with
/// `X(u) = E(u) Vd(t - u) E(-u)`.
pub fn k3_generator_with_drive(
    h_static: &Matrix2<Complex64>,
    drive_h: &dyn Fn(f64) -> Matrix2<Complex64>,
    noise: &OUNoiseParams,
    t: f64,
    tol: f64,
) -> Result<AffineBloch, CoreError> {
    let v_s = commutator_superop_unchecked(&pauli::sigma_z());
    let v_s2 = v_s * v_s;
    let g = noise.noise_power;
    let tau = noise.memory_time;
    let tail = (-t / tau).exp();

    let integrand = &mut |u: f64| -> Matrix4<Complex64> {
        let j = 0.25 * g * ((-u / tau).exp() - tail);
        let e_fwd = free_conjugation(h_static, u);
        let e_bwd = free_conjugation(h_static, -u);
        let x = e_fwd * commutator_superop_unchecked(&drive_h(t - u)) * e_bwd;
        (v_s * x * v_s - v_s2 * x) * Complex64::new(j, 0.0)
    };

    let integral = adaptive_gk(integrand, 0.0, t, tol)?;
    Ok(superop_to_bloch(&(integral * Complex64::new(0.0, 1.0))))
}

/// Third-order generator of the model's own transverse drive.
pub fn k3_generator_general(
    model: &DephasingModel,
    frame: Frame,
    t: f64,
    tol: f64,
) -> Result<AffineBloch, CoreError> {
    let h0 = static_hamiltonian(model, frame);
    k3_generator_with_drive(
        &h0,
        &|u| drive_hamiltonian(model, frame, u),
        &model.noise,
        t,
        tol,
    )
}
