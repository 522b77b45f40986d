//! Shared numerical foundations for the dephasing-qubit solver stack.
//!
//! Conventions fixed here and relied on by every downstream crate:
//!
//! * Density matrices are 2x2 complex, `rho = (1 + r . sigma)/2` with Bloch
//!   vector `r = Tr(sigma rho)`.
//! * Vectorization is column-stacking: `vec(A rho B) = (B^T (x) A) vec(rho)`.
//! * A Hamiltonian `H = (v/2) . sigma` generates `rdot = v x r`, i.e. the
//!   Bloch-space generator is `v . L` with the SO(3) basis of [`so3`].
//! * `exp(theta L_z)` applied to `(1,0,0)` gives `(cos theta, sin theta, 0)`.

pub mod bloch;
pub mod drive;
pub mod error;
pub mod expm;
pub mod ode;
pub mod pauli;
pub mod quad;
pub mod so3;
pub mod superop;
pub mod vectorize;

pub use error::CoreError;

pub use bloch::{bloch_decode, bloch_decode_flagged, bloch_encode};
pub use drive::DriveSpec;
pub use expm::{exp_action, exp_action_real, expm, expm_real};
pub use superop::{commutator_superop, superop_to_bloch, AffineBloch};
pub use vectorize::{devectorize, vectorize};
