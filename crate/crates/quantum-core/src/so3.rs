//! so(3) generators and rotations acting on Bloch vectors.
//!
//! Convention: `exp(theta L_z)` rotates (1,0,0) into (cos theta, sin theta, 0),
//! and a Hamiltonian `H = (v/2) . sigma` generates `rdot = v x r`, i.e. the
//! Bloch generator is `axis_generator(v)`.

use nalgebra::{Matrix3, Vector3};

#[rustfmt::skip]
pub fn l_x() -> Matrix3<f64> {
    Matrix3::new(
        0.0, 0.0,  0.0,
        0.0, 0.0, -1.0,
        0.0, 1.0,  0.0,
    )
}

#[rustfmt::skip]
pub fn l_y() -> Matrix3<f64> {
    Matrix3::new(
         0.0, 0.0, 1.0,
         0.0, 0.0, 0.0,
        -1.0, 0.0, 0.0,
    )
}

#[rustfmt::skip]
pub fn l_z() -> Matrix3<f64> {
    Matrix3::new(
        0.0, -1.0, 0.0,
        1.0,  0.0, 0.0,
        0.0,  0.0, 0.0,
    )
}

/// `v . L`, the generator of `rdot = v x r`.
pub fn axis_generator(v: &Vector3<f64>) -> Matrix3<f64> {
    l_x() * v.x + l_y() * v.y + l_z() * v.z
}

/// Projector onto the xy-plane, diag(1, 1, 0).
pub fn transverse_projector() -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, 0.0))
}

/// Closed-form `exp(theta L_z)`.
#[rustfmt::skip]
pub fn rotation_z(theta: f64) -> Matrix3<f64> {
    let (s, c) = theta.sin_cos();
    Matrix3::new(
        c,  -s,  0.0,
        s,   c,  0.0,
        0.0, 0.0, 1.0,
    )
}

/// Rodrigues rotation by angle `|axis| * dt` about `axis`, i.e.
/// `exp(dt * axis_generator(axis))`. Stable for small angles.
pub fn rotation_about(axis: &Vector3<f64>, dt: f64) -> Matrix3<f64> {
    let norm = axis.norm();
    let theta = norm * dt;
    if norm == 0.0 {
        return Matrix3::identity();
    }
    let k = axis_generator(&(axis / norm));
    Matrix3::identity() + k * theta.sin() + k * k * (1.0 - theta.cos())
}
