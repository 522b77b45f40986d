use noise_engine::OUNoiseParams;
use quantum_core::drive::DriveSpec;

#[derive(Debug, Clone, Copy)]
pub struct DephasingModel {
    /// Qubit splitting Omega.
    pub omega: f64,
    pub drive: DriveSpec,
    pub noise: OUNoiseParams,
}

impl DephasingModel {
    /// Detuning of the qubit from the drive, `Omega - omega_drive`.
    pub fn detuning(&self) -> f64 {
        self.omega - self.drive.frequency
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Lab,
    /// Co-rotating with the drive; the deterministic Hamiltonian is static.
    Rotating,
}

/// Whether dissipative rates keep their finite-time switch-on factors or sit
/// at their long-time limits (the form whose Laplace transform is rational).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMode {
    Transient,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TclOrder {
    Second,
    Third,
}
