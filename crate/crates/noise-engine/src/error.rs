use quantum_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NoiseError {
    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error(transparent)]
    Core(#[from] CoreError),
}
