//! Column-stacking vectorization of density matrices.
//!
//! `vec` stacks columns top to bottom, so `vec(A rho B) = (B^T (x) A) vec(rho)`.

use nalgebra::{DMatrix, DVector, Matrix2, Vector4};
use num_complex::Complex64;

use crate::error::CoreError;

pub fn vectorize(rho: &Matrix2<Complex64>) -> Vector4<Complex64> {
    // nalgebra stores column-major, so the raw slice is already column-stacked.
    Vector4::from_column_slice(rho.as_slice())
}

pub fn devectorize(v: &Vector4<Complex64>) -> Matrix2<Complex64> {
    Matrix2::from_column_slice(v.as_slice())
}

pub fn vectorize_dyn(rho: &DMatrix<Complex64>) -> DVector<Complex64> {
    DVector::from_column_slice(rho.as_slice())
}

/// Inverse of [`vectorize_dyn`]; rejects lengths that are not perfect squares.
pub fn devectorize_dyn(v: &DVector<Complex64>) -> Result<DMatrix<Complex64>, CoreError> {
    let len = v.len();
    let n = (len as f64).sqrt().round() as usize;
    if n * n != len {
        return Err(CoreError::BadVectorLength { len });
    }
    Ok(DMatrix::from_column_slice(n, n, v.as_slice()))
}
