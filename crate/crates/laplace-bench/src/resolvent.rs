//! Frequency-domain solutions of the exact non-local evolution equation
//! for transverse Gaussian noise with an exponential correlation kernel.
//!
//! In the co-rotating frame the Bloch vector obeys
//! `r'(t) = A r(t) - (g/tau) int_0^t exp(-(t-u)/tau) P r(u) du`
//! with `A` the coherent rotation generator and `P` the projector onto the
//! transverse plane. The Laplace transform is the 3x3 linear system
//! `[s I - A + g/(1+s tau) P] R(s) = r0`.

use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use num_complex::Complex64;

use quantum_core::so3::{axis_generator, transverse_projector};

use crate::error::LaplaceError;
use crate::poly::{Poly, RationalFunction};

fn coherent_axis(delta: f64, d: f64, phi: f64) -> Vector3<f64> {
    Vector3::new(d * phi.cos(), d * phi.sin(), delta)
}

/// Componentwise Laplace transform of the Bloch vector, evaluated by a
/// direct complex solve at one frequency.
pub fn novikov_resolvent(
    delta: f64,
    d: f64,
    phi: f64,
    g: f64,
    tau: f64,
    r0: Vector3<f64>,
    s: Complex64,
) -> Result<Vector3<Complex64>, LaplaceError> {
    let a = axis_generator(&coherent_axis(delta, d, phi));
    let p = transverse_projector();
    let kernel = g / (1.0 + s * tau);

    let mut m = DMatrix::<Complex64>::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let diag = if i == j { s } else { Complex64::new(0.0, 0.0) };
            m[(i, j)] = diag - Complex64::new(a[(i, j)], 0.0) + kernel * p[(i, j)];
        }
    }
    let rhs = DVector::from_iterator(3, r0.iter().map(|&x| Complex64::new(x, 0.0)));
    let sol = m
        .lu()
        .solve(&rhs)
        .ok_or(LaplaceError::SingularResolvent)?;
    Ok(Vector3::new(sol[0], sol[1], sol[2]))
}

fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1]
            .mul(&m[r2][c2])
            .add(&m[r1][c2].mul(&m[r2][c1]).scale(Complex64::new(-1.0, 0.0)))
    };
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .add(&m[0][1].mul(&minor(1, 2, 0, 2)).scale(Complex64::new(-1.0, 0.0)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// The same transform as three exact rational functions of `s`, one per
/// Bloch component.
///
/// Multiplying the resolvent system through by `(1 + s tau)` clears the
/// memory kernel and leaves a 3x3 matrix with polynomial entries; Cramer's
/// rule then yields each component as a ratio of polynomial determinants.
/// The projector `P` has no longitudinal row, so the cleared matrix's third
/// row carries an exact `(1 + s tau)` factor that would otherwise plant a
/// spurious denominator root right next to the kernel-induced pole pair and
/// wreck its conditioning; that factor is divided out of row and right-hand
/// side analytically before the determinants are formed, leaving a
/// degree-5 denominator whose roots stay tight enough for the pole-residue
/// inversion to recognize every removable pole.
pub fn novikov_rational(
    delta: f64,
    d: f64,
    phi: f64,
    g: f64,
    tau: f64,
    r0: Vector3<f64>,
) -> Result<[RationalFunction; 3], LaplaceError> {
    let a = axis_generator(&coherent_axis(delta, d, phi));
    let p = transverse_projector();

    // Rows 0,1: m[i][j] = (1 + s tau)(s delta_ij - A_ij) + g P_ij.
    // Row 2: the same row divided by its exact (1 + s tau) factor,
    // i.e. plain (s delta_ij - A_ij).
    let entry = |i: usize, j: usize| {
        if i < 2 {
            if i == j {
                Poly::from_real(&[g * p[(i, i)] - a[(i, i)], 1.0 - tau * a[(i, i)], tau])
            } else {
                Poly::from_real(&[-a[(i, j)], -tau * a[(i, j)]])
            }
        } else if i == j {
            Poly::from_real(&[-a[(i, j)], 1.0])
        } else {
            Poly::from_real(&[-a[(i, j)]])
        }
    };
    let m: [[Poly; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| entry(i, j)));
    let rhs: [Poly; 3] = std::array::from_fn(|i| {
        if i < 2 {
            Poly::from_real(&[r0[i], tau * r0[i]])
        } else {
            Poly::from_real(&[r0[i]])
        }
    });

    let den = det3(&m);
    let numerator = |col: usize| {
        let mut replaced = m.clone();
        for row in 0..3 {
            replaced[row][col] = rhs[row].clone();
        }
        det3(&replaced)
    };
    let components: [RationalFunction; 3] = std::array::from_fn(|i| RationalFunction {
        num: numerator(i),
        den: den.clone(),
    });

    // Spot-check the construction against the direct complex solve.
    for k in 0..5 {
        let s = Complex64::new(0.35 + 0.4 * k as f64, 1.1 - 0.5 * k as f64);
        let solved = novikov_resolvent(delta, d, phi, g, tau, r0, s)?;
        for i in 0..3 {
            let dev = (components[i].eval(s) - solved[i]).norm();
            let scale = solved[i].norm().max(1e-6);
            if dev > 1e-10 * scale {
                return Err(LaplaceError::SelfCheckFailed { deviation: dev / scale });
            }
        }
    }
    Ok(components)
}

/// Constant-coefficient generator of the memory-extended 6-dimensional
/// system equivalent to the non-local equation: the Bloch vector is
/// augmented with `m(t) = int_0^t exp(-(t-u)/tau) P r(u) du`.
pub fn extended_generator(delta: f64, d: f64, phi: f64, g: f64, tau: f64) -> DMatrix<f64> {
    let a: Matrix3<f64> = axis_generator(&coherent_axis(delta, d, phi));
    let p = transverse_projector();
    let mut b = DMatrix::<f64>::zeros(6, 6);
    for i in 0..3 {
        for j in 0..3 {
            b[(i, j)] = a[(i, j)];
            b[(i + 3, j)] = p[(i, j)];
        }
        b[(i, i + 3)] = -g / tau;
        b[(i + 3, i + 3)] = -1.0 / tau;
    }
    b
}
