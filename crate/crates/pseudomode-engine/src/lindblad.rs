//! Exact propagation of the composite qubit + pseudo-mode system under a
//! time-dependent Lindblad equation, with physicality diagnostics.

use nalgebra::{DMatrix, DVector, Matrix2, SymmetricEigen, Vector3};
use num_complex::Complex64;

use quantum_core::bloch::{bloch_decode, bloch_encode};
use quantum_core::drive::DriveSpec;
use quantum_core::ode::{integrate_complex, OdeOpts};
use quantum_core::pauli;
use quantum_core::superop::{commutator_superop_dyn, dissipator_superop_dyn};
use quantum_core::vectorize::{devectorize_dyn, vectorize_dyn};

use crate::bath::PseudoModeBath;
use crate::error::PseudoModeError;

/// Largest composite Hilbert-space dimension accepted; the vectorized
/// generator is dense with dimension^4 entries.
const MAX_DIM: usize = 48;

/// Reduced qubit trajectory plus composite-state diagnostics.
#[derive(Debug, Clone)]
pub struct PseudoModeSolution {
    pub times: Vec<f64>,
    /// Reduced qubit Bloch vector at each grid time.
    pub bloch: Vec<Vector3<f64>>,
    /// Reduced qubit coherence (excited-ground matrix element) at each
    /// grid time, in the lab frame.
    pub coherence: Vec<Complex64>,
    /// Largest |tr rho - 1| over the grid.
    pub max_trace_drift: f64,
    /// Largest matrix element of |rho - rho^dag| over the grid.
    pub max_hermiticity_error: f64,
    /// Smallest eigenvalue of the composite density matrix over the grid.
    pub min_eigenvalue: f64,
}

/// Bosonic annihilation operator on Fock levels `0..dim`.
fn annihilation(dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn to_dyn(m: &Matrix2<Complex64>) -> DMatrix<Complex64> {
    DMatrix::from_fn(2, 2, |i, j| m[(i, j)])
}

/// Qubit operator on the composite space (qubit factor leftmost).
fn lift_qubit(op: &Matrix2<Complex64>, mode_dim: usize) -> DMatrix<Complex64> {
    to_dyn(op).kronecker(&DMatrix::identity(mode_dim, mode_dim))
}

/// Single-mode operator on the composite space.
fn lift_mode(
    op: &DMatrix<Complex64>,
    which: usize,
    num_modes: usize,
    levels: usize,
) -> DMatrix<Complex64> {
    let mut out = DMatrix::identity(2, 2);
    for k in 0..num_modes {
        let factor = if k == which {
            op.clone()
        } else {
            DMatrix::identity(levels, levels)
        };
        out = out.kronecker(&factor);
    }
    out
}

/// Minimum eigenvalue of the Hermitian part of `rho`, computed through the
/// real symmetric embedding `[[Re, -Im], [Im, Re]]` (each eigenvalue of
/// `rho` appears twice in the embedding).
fn min_eigenvalue(rho: &DMatrix<Complex64>) -> f64 {
    let n = rho.nrows();
    let herm = (rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    let mut s = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = herm[(i, j)];
            s[(i, j)] = z.re;
            s[(i, j + n)] = -z.im;
            s[(i + n, j)] = z.im;
            s[(i + n, j + n)] = z.re;
        }
    }
    SymmetricEigen::new(s)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Propagate the composite qubit + modes density matrix from
/// `qubit Bloch state r0 (x) all-mode vacuum` and reduce it to the qubit.
///
/// The Hamiltonian is `Omega |e><e| + sum_l xi_l n_l + sum_l eta_l
/// (sigma_+ a_l + sigma_- a_l^dag) + f(t) sigma_+ + f*(t) sigma_-`; each
/// mode decays at rate `Gamma_l` through a Lindblad dissipator in `a_l`.
pub fn pm_lindblad_propagate(
    bath: &PseudoModeBath,
    omega: f64,
    drive: &DriveSpec,
    r0: &Vector3<f64>,
    t_grid: &[f64],
    opts: &OdeOpts,
) -> Result<PseudoModeSolution, PseudoModeError> {
    let levels = bath.n_max + 1;
    let num_modes = bath.modes.len();
    let mode_dim = levels
        .checked_pow(num_modes as u32)
        .filter(|&md| 2 * md <= MAX_DIM)
        .ok_or(PseudoModeError::DimensionTooLarge {
            dim: 2 * levels.pow(num_modes.min(8) as u32),
            limit: MAX_DIM,
        })?;

    let sp = lift_qubit(&pauli::sigma_plus(), mode_dim);
    let sm = lift_qubit(&pauli::sigma_minus(), mode_dim);
    let excited = lift_qubit(&(pauli::sigma_plus() * pauli::sigma_minus()), mode_dim);

    let mut h_static = excited * Complex64::new(omega, 0.0);
    let mut l_static = DMatrix::<Complex64>::zeros(
        (2 * mode_dim) * (2 * mode_dim),
        (2 * mode_dim) * (2 * mode_dim),
    );
    for (l, mode) in bath.modes.iter().enumerate() {
        let a = lift_mode(&annihilation(levels), l, num_modes, levels);
        let number = a.adjoint() * &a;
        h_static += number * Complex64::new(mode.frequency, 0.0);
        h_static += (&sp * &a + &sm * a.adjoint()) * Complex64::new(mode.coupling, 0.0);
        l_static += dissipator_superop_dyn(&a) * Complex64::new(mode.decay, 0.0);
    }
    l_static += commutator_superop_dyn(&h_static) * Complex64::new(0.0, -1.0);
    let l_plus = commutator_superop_dyn(&sp) * Complex64::new(0.0, -1.0);
    let l_minus = commutator_superop_dyn(&sm) * Complex64::new(0.0, -1.0);

    let mut vacuum = DMatrix::<Complex64>::zeros(mode_dim, mode_dim);
    vacuum[(0, 0)] = Complex64::new(1.0, 0.0);
    let rho0 = to_dyn(&bloch_decode(r0)).kronecker(&vacuum);
    let v0 = vectorize_dyn(&rho0);

    let driven = drive.amplitude != 0.0;
    let states = integrate_complex(
        &mut |t, v: &DVector<Complex64>| {
            let mut dv = &l_static * v;
            if driven {
                let f = drive.envelope(t);
                dv += (&l_plus * v) * f + (&l_minus * v) * f.conj();
            }
            dv
        },
        v0,
        t_grid,
        opts,
    )?;

    let mut bloch = Vec::with_capacity(states.len());
    let mut coherence = Vec::with_capacity(states.len());
    let mut max_trace_drift: f64 = 0.0;
    let mut max_hermiticity_error: f64 = 0.0;
    let mut min_eig = f64::INFINITY;
    for v in &states {
        let rho = devectorize_dyn(v)?;
        max_trace_drift = max_trace_drift.max((rho.trace() - 1.0).norm());
        let dev = &rho - rho.adjoint();
        max_hermiticity_error = max_hermiticity_error
            .max(dev.iter().map(|z| z.norm()).fold(0.0, f64::max));
        min_eig = min_eig.min(min_eigenvalue(&rho));

        let mut rho_s = Matrix2::<Complex64>::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..mode_dim {
                    rho_s[(i, j)] += rho[(i * mode_dim + k, j * mode_dim + k)];
                }
            }
        }
        bloch.push(bloch_encode(&rho_s));
        coherence.push(rho_s[(0, 1)]);
    }

    Ok(PseudoModeSolution {
        times: t_grid.to_vec(),
        bloch,
        coherence,
        max_trace_drift,
        max_hermiticity_error,
        min_eigenvalue: min_eig,
    })
}

/// De-rotate the lab-frame qubit coherence at the qubit splitting:
/// `exp(+i Omega t)` times the excited-ground matrix element.
pub fn interaction_picture_coherence(omega: f64, t: f64, coherence: Complex64) -> Complex64 {
    (Complex64::i() * omega * t).exp() * coherence
}
