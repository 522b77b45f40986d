//! Discrete pseudo-mode representation of a structured bosonic environment.
//!
//! Each mode is a damped harmonic oscillator; together they reproduce a bath
//! correlation function that is a finite sum of damped complex exponentials.

use num_complex::Complex64;

use crate::error::PseudoModeError;

/// One damped harmonic mode coupled linearly to the qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoMode {
    /// Coupling strength eta.
    pub coupling: f64,
    /// Mode frequency xi.
    pub frequency: f64,
    /// Energy decay rate Gamma (> 0).
    pub decay: f64,
}

/// A set of pseudo-modes plus the Fock truncation used when the composite
/// qubit + modes system is propagated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoModeBath {
    pub modes: Vec<PseudoMode>,
    /// Highest Fock level kept per mode (levels 0..=n_max).
    pub n_max: usize,
}

impl PseudoModeBath {
    pub fn from_modes(modes: Vec<PseudoMode>, n_max: usize) -> Result<Self, PseudoModeError> {
        if modes.is_empty() {
            return Err(PseudoModeError::EmptyBath);
        }
        if n_max == 0 {
            return Err(PseudoModeError::BadTruncation);
        }
        for (index, m) in modes.iter().enumerate() {
            if !(m.decay > 0.0) {
                return Err(PseudoModeError::NonPositiveDecay { index, value: m.decay });
            }
        }
        Ok(Self { modes, n_max })
    }

    /// Build the bath from poles and residues of a meromorphic spectral
    /// response: a pole at `xi - i Gamma/2` whose residue `r` makes `-i r`
    /// positive real contributes a mode with coupling
    /// `coupling_scale * sqrt(-i r)`.
    pub fn from_spectral_poles(
        coupling_scale: f64,
        poles: &[Complex64],
        residues: &[Complex64],
        n_max: usize,
    ) -> Result<Self, PseudoModeError> {
        if poles.len() != residues.len() {
            return Err(PseudoModeError::PoleResidueMismatch {
                poles: poles.len(),
                residues: residues.len(),
            });
        }
        let mut modes = Vec::with_capacity(poles.len());
        for (index, (&z, &r)) in poles.iter().zip(residues).enumerate() {
            if z.im >= 0.0 {
                return Err(PseudoModeError::PoleInUpperHalfPlane { index, im: z.im });
            }
            let w = -Complex64::i() * r;
            if w.re <= 0.0 || w.im.abs() > 1e-12 * r.norm() {
                return Err(PseudoModeError::InvalidResidue { index, value: r });
            }
            modes.push(PseudoMode {
                coupling: coupling_scale * w.re.sqrt(),
                frequency: z.re,
                decay: -2.0 * z.im,
            });
        }
        Self::from_modes(modes, n_max)
    }

    /// Bath correlation function
    /// `c(t) = sum_l eta_l^2 exp(-i xi_l t - Gamma_l t / 2)`.
    pub fn correlation(&self, t: f64) -> Complex64 {
        self.modes
            .iter()
            .map(|m| {
                let eta2 = m.coupling * m.coupling;
                eta2 * (Complex64::new(-0.5 * m.decay, -m.frequency) * t).exp()
            })
            .sum()
    }
}
