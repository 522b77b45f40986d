use num_complex::Complex64;
use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PseudoModeError {
    #[error("bath must contain at least one pseudo-mode")]
    EmptyBath,

    #[error("Fock truncation must keep at least levels 0 and 1")]
    BadTruncation,

    #[error("pseudo-mode {index} has non-positive decay rate {value:.3e}")]
    NonPositiveDecay { index: usize, value: f64 },

    #[error("{poles} spectral poles but {residues} residues")]
    PoleResidueMismatch { poles: usize, residues: usize },

    #[error("spectral pole {index} must lie in the lower half-plane; imaginary part {im:.3e}")]
    PoleInUpperHalfPlane { index: usize, im: f64 },

    #[error("residue {index} times -i must be positive real; got {value}")]
    InvalidResidue { index: usize, value: Complex64 },

    #[error("composite dimension {dim} exceeds the dense-propagation limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error(transparent)]
    Core(#[from] CoreError),
}
