//! Closed-form generator pieces, order by order.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use noise_engine::OUNoiseParams;
use quantum_core::superop::AffineBloch;
use quantum_core::so3;

use crate::model::{DephasingModel, Frame, KernelMode, TclOrder};

/// First-order (Hamiltonian) part: rotation about the instantaneous axis.
pub fn hamiltonian_generator(model: &DephasingModel, frame: Frame, t: f64) -> Matrix3<f64> {
    let axis = match frame {
        Frame::Lab => {
            let mut v = model.drive.bloch_axis(t);
            v.z += model.omega;
            v
        }
        Frame::Rotating => {
            // The drive axis frozen at its t = 0 orientation, plus detuning.
            let mut v = model.drive.bloch_axis(0.0);
            v.z += model.detuning();
            v
        }
    };
    so3::axis_generator(&axis)
}

/// Second-order dissipator: `-g (1 - exp(-t/tau))` times the transverse
/// projector, identical in both frames and independent of the drive.
pub fn second_order_generator(noise: &OUNoiseParams, mode: KernelMode, t: f64) -> Matrix3<f64> {
    let g = noise.noise_power;
    let rate = match mode {
        KernelMode::Transient => g * (1.0 - (-t / noise.memory_time).exp()),
        KernelMode::Asymptotic => g,
    };
    so3::transverse_projector() * (-rate)
}

/// `(exp(z t) - 1) / z`, stable as `z -> 0`.
fn expm1_over(z: Complex64, t: f64) -> Complex64 {
    let zt = z * t;
    if zt.norm() < 1e-8 {
        let one = Complex64::new(1.0, 0.0);
        t * (one + zt * 0.5 + zt * zt / 6.0 + zt * zt * zt / 24.0)
    } else {
        (zt.exp() - 1.0) / z
    }
}

/// Time-profile factor of the third-order rate. Transient:
/// `tau (e^{(i Delta - 1/tau) t} - 1)/(i Delta - 1/tau)
///  - tau e^{-t/tau} (e^{i Delta t} - 1)/(i Delta)`;
/// asymptotic limit `tau^2 / (1 - i Delta tau)`.
fn third_order_profile(delta: f64, tau: f64, mode: KernelMode, t: f64) -> Complex64 {
    match mode {
        KernelMode::Transient => {
            let z1 = Complex64::new(-1.0 / tau, delta);
            let z2 = Complex64::new(0.0, delta);
            expm1_over(z1, t) * tau - expm1_over(z2, t) * (tau * (-t / tau).exp())
        }
        KernelMode::Asymptotic => {
            let denom = Complex64::new(1.0, -delta * tau);
            Complex64::new(tau * tau, 0.0) / denom
        }
    }
}

/// Third-order correction. Only the third column carries entries: the noise
/// couples along z, so the correction feeds r_z into the transverse
/// components. The phase factor is `e^{i(omega t + phi)}` in the lab frame
/// and `e^{i phi}` in the rotating frame.
pub fn third_order_generator(
    model: &DephasingModel,
    frame: Frame,
    mode: KernelMode,
    t: f64,
) -> Matrix3<f64> {
    let noise = &model.noise;
    let drive = &model.drive;
    let tau = noise.memory_time;
    let phase_angle = match frame {
        Frame::Lab => drive.frequency * t + drive.phase,
        Frame::Rotating => drive.phase,
    };
    let w = Complex64::new(0.0, -1.0)
        * Complex64::from_polar(1.0, phase_angle)
        * third_order_profile(model.detuning(), tau, mode, t)
        * (noise.noise_power * drive.amplitude / tau);
    let mut m = Matrix3::zeros();
    m[(0, 2)] = w.re;
    m[(1, 2)] = w.im;
    m
}

/// Full time-local generator at the requested cumulant order.
pub fn tcl_generator(
    model: &DephasingModel,
    order: TclOrder,
    frame: Frame,
    mode: KernelMode,
    t: f64,
) -> AffineBloch {
    let mut m = hamiltonian_generator(model, frame, t)
        + second_order_generator(&model.noise, mode, t);
    if order == TclOrder::Third {
        m += third_order_generator(model, frame, mode, t);
    }
    AffineBloch { m, b: Vector3::zeros() }
}
