//! Dense matrix exponential via Pade approximation with scaling and squaring.
//!
//! Order is selected from the 1-norm against the standard backward-error
//! thresholds; matrices above the order-13 threshold are scaled by a power
//! of two and the result squared back.

use nalgebra::{ComplexField, DMatrix, DVector, Matrix2};
use num_complex::Complex64;

use crate::pauli;

const THETA_3: f64 = 1.495_585_217_958_292e-2;
const THETA_5: f64 = 2.539_398_330_063_230e-1;
const THETA_7: f64 = 9.504_178_996_162_932e-1;
const THETA_9: f64 = 2.097_847_961_257_068;
const THETA_13: f64 = 5.371_920_351_148_152;

const B_3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B_5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B_7: [f64; 8] = [
    17_297_280.0,
    8_648_640.0,
    1_995_840.0,
    277_200.0,
    25_200.0,
    1_512.0,
    56.0,
    1.0,
];
const B_9: [f64; 10] = [
    17_643_225_600.0,
    8_821_612_800.0,
    2_075_673_600.0,
    302_702_400.0,
    30_270_240.0,
    2_162_160.0,
    110_880.0,
    3_960.0,
    90.0,
    1.0,
];
const B_13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

fn one_norm<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|x| x.clone().modulus()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn pade_solve<T: ComplexField<RealField = f64>>(
    u: DMatrix<T>,
    v: DMatrix<T>,
) -> DMatrix<T> {
    let p = &v + &u;
    let q = v - u;
    q.lu()
        .solve(&p)
        .expect("Pade denominator is nonsingular for matrices within the scaling thresholds")
}

fn pade_low<T: ComplexField<RealField = f64>>(a: &DMatrix<T>, b: &[f64]) -> DMatrix<T> {
    let n = a.nrows();
    let id = DMatrix::<T>::identity(n, n);
    let a2 = a * a;
    // Even part V and the even factor of U, built by Horner in A^2.
    let degree = (b.len() - 1) / 2;
    let mut u_even = id.clone().scale_by(b[1]);
    let mut v = id.clone().scale_by(b[0]);
    let mut pow = id;
    for k in 1..=degree {
        pow = &pow * &a2;
        u_even += pow.clone().scale_by(b[2 * k + 1]);
        v += pow.clone().scale_by(b[2 * k]);
    }
    pade_solve(a * u_even, v)
}

fn pade_13<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> DMatrix<T> {
    let n = a.nrows();
    let id = DMatrix::<T>::identity(n, n);
    let b = &B_13;
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let u_inner = a6.clone().scale_by(b[13]) + a4.clone().scale_by(b[11]) + a2.clone().scale_by(b[9]);
    let u = a
        * (&a6 * u_inner
            + a6.clone().scale_by(b[7])
            + a4.clone().scale_by(b[5])
            + a2.clone().scale_by(b[3])
            + id.clone().scale_by(b[1]));
    let v_inner = a6.clone().scale_by(b[12]) + a4.clone().scale_by(b[10]) + a2.clone().scale_by(b[8]);
    let v = &a6 * v_inner
        + a6.scale_by(b[6])
        + a4.scale_by(b[4])
        + a2.scale_by(b[2])
        + id.scale_by(b[0]);
    pade_solve(u, v)
}

trait ScaleBy<T> {
    fn scale_by(self, k: f64) -> Self;
}

impl<T: ComplexField<RealField = f64>> ScaleBy<T> for DMatrix<T> {
    fn scale_by(self, k: f64) -> Self {
        self * T::from_real(k)
    }
}

fn expm_generic<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> DMatrix<T> {
    assert_eq!(a.nrows(), a.ncols(), "matrix exponential needs a square matrix");
    let norm = one_norm(a);
    if norm <= THETA_3 {
        return pade_low(a, &B_3);
    }
    if norm <= THETA_5 {
        return pade_low(a, &B_5);
    }
    if norm <= THETA_7 {
        return pade_low(a, &B_7);
    }
    if norm <= THETA_9 {
        return pade_low(a, &B_9);
    }
    let s = if norm <= THETA_13 {
        0
    } else {
        (norm / THETA_13).log2().ceil() as u32
    };
    let scaled = a.clone().scale_by(0.5f64.powi(s as i32));
    let mut x = pade_13(&scaled);
    for _ in 0..s {
        x = &x * &x;
    }
    x
}

/// `exp(A)` for complex square matrices.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    expm_generic(a)
}

/// `exp(A)` for real square matrices.
pub fn expm_real(a: &DMatrix<f64>) -> DMatrix<f64> {
    expm_generic(a)
}

/// `exp(A) v`.
pub fn exp_action(a: &DMatrix<Complex64>, v: &DVector<Complex64>) -> DVector<Complex64> {
    expm(a) * v
}

/// `exp(A) v` for real inputs.
pub fn exp_action_real(a: &DMatrix<f64>, v: &DVector<f64>) -> DVector<f64> {
    expm_real(a) * v
}

/// Closed-form `exp(-i t H)` for Hermitian 2x2 `H = a0 1 + a . sigma`:
/// a global phase times a rotation `cos(|a| t) - i sin(|a| t) (a_hat . sigma)`.
pub fn unitary_evolution(h: &Matrix2<Complex64>, t: f64) -> Matrix2<Complex64> {
    let (a0, a) = pauli::pauli_decompose(h);
    let phase = Complex64::from_polar(1.0, -a0 * t);
    let norm = a.norm();
    if norm == 0.0 {
        return pauli::identity() * phase;
    }
    let angle = norm * t;
    let ah = a / norm;
    let axis = pauli::sigma_x() * Complex64::new(ah.x, 0.0)
        + pauli::sigma_y() * Complex64::new(ah.y, 0.0)
        + pauli::sigma_z() * Complex64::new(ah.z, 0.0);
    (pauli::identity() * Complex64::new(angle.cos(), 0.0)
        - axis * Complex64::new(0.0, angle.sin()))
        * phase
}
