//! Tetradic superoperators and their affine Bloch images.

use nalgebra::{DMatrix, Matrix2, Matrix3, Matrix4, Vector3};
use num_complex::Complex64;

use crate::error::CoreError;
use crate::{bloch, pauli, vectorize};

/// Affine Bloch-space generator: `rdot = m r + b`.
///
/// Trace conservation is automatic in this representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineBloch {
    pub m: Matrix3<f64>,
    pub b: Vector3<f64>,
}

impl AffineBloch {
    pub fn zero() -> Self {
        Self { m: Matrix3::zeros(), b: Vector3::zeros() }
    }

    pub fn apply(&self, r: &Vector3<f64>) -> Vector3<f64> {
        self.m * r + self.b
    }
}

impl std::ops::Add for AffineBloch {
    type Output = AffineBloch;
    fn add(self, o: AffineBloch) -> AffineBloch {
        AffineBloch { m: self.m + o.m, b: self.b + o.b }
    }
}

/// Tetradic form of `[H, .]` for a Hermitian 2x2 `H`:
/// `1 (x) H - H^T (x) 1` in column-stacking convention.
///
/// Rejects inputs whose Hermiticity deviation exceeds 1e-12.
pub fn commutator_superop(h: &Matrix2<Complex64>) -> Result<Matrix4<Complex64>, CoreError> {
    let dev = pauli::hermiticity_error(h);
    if dev > 1e-12 {
        return Err(CoreError::NonHermitian { deviation: dev });
    }
    Ok(commutator_superop_unchecked(h))
}

/// Same construction without the Hermiticity gate.
///
/// Needed when a Hermitian H(t) is assembled from non-Hermitian pieces
/// (e.g. `f(t) sigma_+ + f*(t) sigma_-` split by envelope).
pub fn commutator_superop_unchecked(h: &Matrix2<Complex64>) -> Matrix4<Complex64> {
    let id = pauli::identity();
    let ht = h.transpose();
    let left: Matrix4<Complex64> = id.kronecker(h);
    let right: Matrix4<Complex64> = ht.kronecker(&id);
    left - right
}

/// Dynamic-size `1 (x) H - H^T (x) 1`.
pub fn commutator_superop_dyn(h: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = h.nrows();
    let id = DMatrix::<Complex64>::identity(n, n);
    id.kronecker(h) - h.transpose().kronecker(&id)
}

/// Vectorized Lindblad dissipator for collapse operator `c`:
/// `conj(c) (x) c - 1/2 [1 (x) c^dag c + (c^dag c)^T (x) 1]`.
pub fn dissipator_superop_dyn(c: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = c.nrows();
    let id = DMatrix::<Complex64>::identity(n, n);
    let cdc = c.adjoint() * c;
    let half = Complex64::new(0.5, 0.0);
    c.map(|z| z.conj()).kronecker(c)
        - (id.kronecker(&cdc) + cdc.transpose().kronecker(&id)) * half
}

/// Affine Bloch image of a tetradic generator `rhodot = K rho`.
///
/// `b_i = tr(sigma_i K[1/2])`, `m_ij = tr(sigma_i K[sigma_j / 2])`.
pub fn superop_to_bloch(k: &Matrix4<Complex64>) -> AffineBloch {
    let half = Complex64::new(0.5, 0.0);
    let basis = [pauli::sigma_x(), pauli::sigma_y(), pauli::sigma_z()];

    let apply = |m: &Matrix2<Complex64>| -> Vector3<f64> {
        let out = vectorize::devectorize(&(k * vectorize::vectorize(&(m * half))));
        bloch::bloch_encode(&out)
    };

    let b = apply(&pauli::identity());
    let mut m = Matrix3::zeros();
    for (j, s) in basis.iter().enumerate() {
        m.set_column(j, &apply(s));
    }
    AffineBloch { m, b }
}
