//! Bloch-vector encoding of qubit density matrices.

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;

use crate::pauli;

/// `r_i = Re tr(sigma_i rho)`.
pub fn bloch_encode(rho: &Matrix2<Complex64>) -> Vector3<f64> {
    let basis = [pauli::sigma_x(), pauli::sigma_y(), pauli::sigma_z()];
    Vector3::from_fn(|i, _| (basis[i] * rho).trace().re)
}

/// `rho = (1 + r . sigma) / 2`. Always Hermitian with unit trace;
/// positivity requires |r| <= 1 and is not enforced here.
pub fn bloch_decode(r: &Vector3<f64>) -> Matrix2<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let mut rho = pauli::identity();
    rho += pauli::sigma_x() * Complex64::new(r.x, 0.0);
    rho += pauli::sigma_y() * Complex64::new(r.y, 0.0);
    rho += pauli::sigma_z() * Complex64::new(r.z, 0.0);
    rho * half
}

/// Decode plus a physicality flag: true iff |r| <= 1 + 1e-12.
pub fn bloch_decode_flagged(r: &Vector3<f64>) -> (Matrix2<Complex64>, bool) {
    (bloch_decode(r), r.norm() <= 1.0 + 1e-12)
}
