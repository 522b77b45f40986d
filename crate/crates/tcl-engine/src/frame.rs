use nalgebra::Vector3;

use quantum_core::so3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameDirection {
    ToRotating,
    ToLab,
}

/// Map a Bloch vector between the lab frame and the frame co-rotating at
/// `omega_drive`: `r_rot(t) = exp(-omega t L_z) r_lab(t)` and back.
pub fn rotating_frame_map(
    r: &Vector3<f64>,
    t: f64,
    omega_drive: f64,
    direction: FrameDirection,
) -> Vector3<f64> {
    let theta = match direction {
        FrameDirection::ToRotating => -omega_drive * t,
        FrameDirection::ToLab => omega_drive * t,
    };
    so3::rotation_z(theta) * r
}
