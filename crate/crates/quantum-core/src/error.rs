use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("matrix is not Hermitian: max |H - H^dag| entry = {deviation:.3e}")]
    NonHermitian { deviation: f64 },

    #[error("vector length {len} is not a squared dimension")]
    BadVectorLength { len: usize },

    #[error("non-finite entry encountered")]
    NonFinite,

    #[error("quadrature did not reach tolerance {requested:.3e}; achieved {achieved:.3e}")]
    QuadratureTolerance { requested: f64, achieved: f64 },

    #[error("ODE step size collapsed at t = {t:.6e} (h = {h:.3e})")]
    StepSizeCollapse { t: f64, h: f64 },
}
