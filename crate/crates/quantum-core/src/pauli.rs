//! Pauli matrices and small helpers on 2x2 complex matrices.

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn identity() -> Matrix2<Complex64> {
    Matrix2::new(ONE, ZERO, ZERO, ONE)
}

pub fn sigma_x() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma_y() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, -I, I, ZERO)
}

pub fn sigma_z() -> Matrix2<Complex64> {
    Matrix2::new(ONE, ZERO, ZERO, -ONE)
}

/// Raising operator |0><1| in the basis where |0> is the +z eigenstate.
pub fn sigma_plus() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, ONE, ZERO, ZERO)
}

pub fn sigma_minus() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, ZERO, ONE, ZERO)
}

/// Max entry deviation from Hermiticity.
pub fn hermiticity_error(m: &Matrix2<Complex64>) -> f64 {
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Decompose a Hermitian `H = a0 1 + a . sigma` into `(a0, a)`.
///
/// The precession axis of `H` in Bloch space is `2 a` (from `H = (v/2).sigma`).
pub fn pauli_decompose(h: &Matrix2<Complex64>) -> (f64, Vector3<f64>) {
    let a0 = 0.5 * (h[(0, 0)].re + h[(1, 1)].re);
    let ax = h[(0, 1)].re;
    let ay = -h[(0, 1)].im;
    let az = 0.5 * (h[(0, 0)].re - h[(1, 1)].re);
    (a0, Vector3::new(ax, ay, az))
}
