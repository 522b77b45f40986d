//! Exact Laplace-domain solutions of the dephasing-qubit model and their
//! inversion to the time domain.
//!
//! Everything here works in the rotating frame with detuning
//! `Delta = Omega - omega_drive`. Three families of transforms are covered:
//! the time-local second- and third-order solutions (rational by
//! construction) and the exact non-local solution for OU noise, whose
//! single-exponential memory kernel also makes it rational. Inversion goes
//! through pole-residue decomposition, so time-domain evaluation is a finite
//! sum of complex exponentials, checked against an independent ODE
//! formulation of the same non-local equation.

pub mod error;
pub mod invert;
pub mod novikov_ode;
pub mod poly;
pub mod resolvent;
pub mod transforms;

pub use error::LaplaceError;
pub use invert::{invert_rational, PoleResidueForm, PoleTerm};
pub use novikov_ode::novikov_extended_ode;
pub use poly::{Poly, RationalFunction};
pub use resolvent::{novikov_rational, novikov_resolvent};
pub use transforms::{
    rational_nonlocal, rational_tl2, rational_tl3, rz_nonlocal, rz_tl2, rz_tl3,
};
