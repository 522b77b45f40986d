//! Time-local master-equation generators for a driven qubit with OU
//! dephasing noise, to second and third cumulant order.
//!
//! The model is `H(t) = (Omega/2) sigma_z + H_drive(t) + eta(t) sigma_z` in
//! the lab frame; in the frame rotating at the drive frequency the
//! deterministic part becomes static with detuning `Delta = Omega - omega`.
//!
//! Closed forms exist for every generator order; the quadrature builders in
//! [`quadrature`] construct the same objects from their defining integrals
//! with the statistical weighting of each block spelled out, and are used to
//! cross-check the closed forms and the cancellation structure.

pub mod frame;
pub mod generator;
pub mod model;
pub mod propagate;
pub mod quadrature;

pub use frame::{rotating_frame_map, FrameDirection};
pub use generator::{
    hamiltonian_generator, second_order_generator, tcl_generator, third_order_generator,
};
pub use model::{DephasingModel, Frame, KernelMode, TclOrder};
pub use propagate::propagate;
pub use quadrature::{k2_generator_quadrature, k3_generator_general, k3_generator_with_drive};
