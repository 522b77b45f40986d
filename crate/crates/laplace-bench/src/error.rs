use thiserror::Error;

#[derive(Debug, Error)]
pub enum LaplaceError {
    #[error("cleared rational form deviates from direct evaluation by {deviation:e}")]
    SelfCheckFailed { deviation: f64 },
    #[error("rational function degrees unsupported: num {num}, den {den}")]
    DegreeUnsupported { num: usize, den: usize },
    #[error("denominator root finding did not converge")]
    RootFinding,
    #[error("root cluster of multiplicity {count} exceeds the supported double-pole case")]
    RepeatedRootCluster { count: usize },
    #[error("pole-residue reconstruction deviates from the input transform by {deviation:e}")]
    Reconstruction { deviation: f64 },
    #[error("resolvent matrix is singular at the requested s")]
    SingularResolvent,
    #[error("extended-state propagation requires a uniform, increasing time grid")]
    NonUniformGrid,
}
