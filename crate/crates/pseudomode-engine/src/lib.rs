//! Solvers for a driven qubit coupled to a structured bosonic environment
//! represented by damped pseudo-modes.
//!
//! Two routes to the reduced qubit dynamics are provided and cross-checked:
//!
//! * exact propagation of the composite qubit + modes density matrix under
//!   a time-dependent Lindblad equation ([`lindblad`]), with trace,
//!   Hermiticity and positivity diagnostics;
//! * a time-local Bloch equation whose rates are closed-form integrals of
//!   the bath correlation function ([`rates`], [`tcl_bloch`]), at second
//!   order (decay rate only) or third order (plus the drive-bath cross
//!   rate).
//!
//! Conventions: `r_z = +1` is the excited state; the composite basis is
//! qubit (x) modes with Fock levels `0..=n_max` per mode.

pub mod bath;
pub mod error;
pub mod lindblad;
pub mod rates;
pub mod tcl_bloch;

pub use bath::{PseudoMode, PseudoModeBath};
pub use error::PseudoModeError;
pub use lindblad::{
    interaction_picture_coherence, pm_lindblad_propagate, PseudoModeSolution,
};
pub use rates::{g_rate, g_rate_quadrature, gamma_rate, gamma_rate_quadrature};
pub use tcl_bloch::{driven_tcl_generator, tcl_bloch_propagate, RateOrder};
