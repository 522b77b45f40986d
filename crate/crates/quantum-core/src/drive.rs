//! Monochromatic qubit drive shared by the classical and quantum solvers.

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;

use crate::pauli;

/// Drive `H_d(t) = f(t) sigma_+ + f*(t) sigma_-` with envelope
/// `f(t) = (amplitude/2) exp(-i (frequency t + phase))`.
///
/// Equivalently `H_d(t) = (amplitude/2) [cos(frequency t + phase) sigma_x
/// + sin(frequency t + phase) sigma_y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    /// Rabi amplitude D (units of the level splitting).
    pub amplitude: f64,
    /// Carrier frequency omega.
    pub frequency: f64,
    /// Phase phi at t = 0.
    pub phase: f64,
}

impl DriveSpec {
    pub fn new(amplitude: f64, frequency: f64, phase: f64) -> Self {
        Self { amplitude, frequency, phase }
    }

    pub fn off() -> Self {
        Self { amplitude: 0.0, frequency: 0.0, phase: 0.0 }
    }

    /// Complex envelope f(t).
    pub fn envelope(&self, t: f64) -> Complex64 {
        0.5 * self.amplitude * (-Complex64::i() * (self.frequency * t + self.phase)).exp()
    }

    /// H_d(t) as a 2x2 Hermitian matrix.
    pub fn hamiltonian(&self, t: f64) -> Matrix2<Complex64> {
        let f = self.envelope(t);
        let sp = pauli::sigma_plus();
        let sm = pauli::sigma_minus();
        sp * f + sm * f.conj()
    }

    /// Bloch precession axis contributed by the drive at time t:
    /// `(D cos(wt+phi), D sin(wt+phi), 0)`.
    pub fn bloch_axis(&self, t: f64) -> Vector3<f64> {
        let arg = self.frequency * t + self.phase;
        Vector3::new(self.amplitude * arg.cos(), self.amplitude * arg.sin(), 0.0)
    }
}
