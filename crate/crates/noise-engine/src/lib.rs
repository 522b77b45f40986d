//! Ornstein-Uhlenbeck noise generation and Monte Carlo ensemble averaging
//! for a dephasing qubit.
//!
//! The stochastic Hamiltonian is `H(t) = H0 + H_drive(t) + eta(t) C` with a
//! stationary OU process `eta` and a fixed Hermitian coupling `C`. Single
//! trajectories are pure Bloch rotations, so norm preservation is a built-in
//! diagnostic of the integrator.

pub mod error;
pub mod mc;
pub mod ou;

pub use error::NoiseError;
pub use mc::{mc_ensemble_average, EnsembleResult};
pub use ou::{sample_ou_path, OUNoiseParams, OUPath};
