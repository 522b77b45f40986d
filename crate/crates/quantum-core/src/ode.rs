//! Dormand-Prince 5(4) integrator with exact stops at requested output times.

use nalgebra::{DVector, Vector3};
use num_complex::Complex64;

use crate::error::CoreError;

#[derive(Debug, Clone, Copy)]
pub struct OdeOpts {
    pub rtol: f64,
    pub atol: f64,
    /// Initial step; `None` picks one from the first derivative.
    pub h0: Option<f64>,
    pub max_steps: usize,
}

impl Default for OdeOpts {
    fn default() -> Self {
        Self { rtol: 1e-9, atol: 1e-12, h0: None, max_steps: 50_000_000 }
    }
}

const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
// Fifth-order weights; the last stage reuses them, giving first-same-as-last.
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// Difference between the 5th- and embedded 4th-order weights.
const ERR: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

macro_rules! dp54_impl {
    ($name:ident, $state:ty, $abs:expr, $lift:expr, $finite:expr) => {
        /// Integrate `ydot = f(t, y)` from `t_grid[0]`, returning the solution
        /// at every grid point. The grid must be strictly increasing.
        pub fn $name<F>(
            f: &mut F,
            y0: $state,
            t_grid: &[f64],
            opts: &OdeOpts,
        ) -> Result<Vec<$state>, CoreError>
        where
            F: FnMut(f64, &$state) -> $state,
        {
            assert!(!t_grid.is_empty(), "output grid must be nonempty");
            assert!(
                t_grid.windows(2).all(|w| w[1] > w[0]),
                "output grid must be strictly increasing"
            );
            let abs = $abs;
            let lift = $lift;
            let finite = $finite;

            let mut out = Vec::with_capacity(t_grid.len());
            out.push(y0.clone());

            let mut t = t_grid[0];
            let mut y = y0;
            let mut k1 = f(t, &y);
            let span = t_grid[t_grid.len() - 1] - t;
            if span == 0.0 {
                return Ok(out);
            }

            // Crude starter: balance state and derivative scales.
            let mut h_prop = opts.h0.unwrap_or_else(|| {
                let y_scale: f64 = y.iter().map(|v| abs(v)).fold(0.0, f64::max).max(opts.atol);
                let d_scale: f64 = k1.iter().map(|v| abs(v)).fold(0.0, f64::max);
                let guess = if d_scale > 1e-300 { 0.01 * y_scale / d_scale } else { 1e-3 * span };
                guess.min(0.1 * span).max(1e-12 * span)
            });

            let mut steps = 0usize;
            for &t_target in &t_grid[1..] {
                while t < t_target {
                    steps += 1;
                    if steps > opts.max_steps {
                        return Err(CoreError::StepSizeCollapse { t, h: h_prop });
                    }
                    let h = h_prop.min(t_target - t);
                    let hits_target = h >= t_target - t;
                    let truncated = h < h_prop;
                    if !hits_target && h <= f64::EPSILON * t.abs().max(1.0) {
                        return Err(CoreError::StepSizeCollapse { t, h });
                    }
                    let hl = lift(h);

                    let k2 = f(t + C[0] * h, &(&y + &k1 * (hl * lift(A2[0]))));
                    let k3 = f(
                        t + C[1] * h,
                        &(&y + &k1 * (hl * lift(A3[0])) + &k2 * (hl * lift(A3[1]))),
                    );
                    let k4 = f(
                        t + C[2] * h,
                        &(&y
                            + &k1 * (hl * lift(A4[0]))
                            + &k2 * (hl * lift(A4[1]))
                            + &k3 * (hl * lift(A4[2]))),
                    );
                    let k5 = f(
                        t + C[3] * h,
                        &(&y
                            + &k1 * (hl * lift(A5[0]))
                            + &k2 * (hl * lift(A5[1]))
                            + &k3 * (hl * lift(A5[2]))
                            + &k4 * (hl * lift(A5[3]))),
                    );
                    let k6 = f(
                        t + C[4] * h,
                        &(&y
                            + &k1 * (hl * lift(A6[0]))
                            + &k2 * (hl * lift(A6[1]))
                            + &k3 * (hl * lift(A6[2]))
                            + &k4 * (hl * lift(A6[3]))
                            + &k5 * (hl * lift(A6[4]))),
                    );
                    let y_new = &y
                        + &k1 * (hl * lift(B5[0]))
                        + &k3 * (hl * lift(B5[2]))
                        + &k4 * (hl * lift(B5[3]))
                        + &k5 * (hl * lift(B5[4]))
                        + &k6 * (hl * lift(B5[5]));
                    let k7 = f(t + h, &y_new);
                    let err_vec = &k1 * (hl * lift(ERR[0]))
                        + &k3 * (hl * lift(ERR[2]))
                        + &k4 * (hl * lift(ERR[3]))
                        + &k5 * (hl * lift(ERR[4]))
                        + &k6 * (hl * lift(ERR[5]))
                        + &k7 * (hl * lift(ERR[6]));

                    let mut sum = 0.0;
                    let mut n = 0usize;
                    for ((e, a), b) in err_vec.iter().zip(y.iter()).zip(y_new.iter()) {
                        let scale = opts.atol + opts.rtol * abs(a).max(abs(b));
                        let q = abs(e) / scale;
                        sum += q * q;
                        n += 1;
                    }
                    let err = (sum / n as f64).sqrt();
                    if !err.is_finite() || !y_new.iter().all(|v| finite(v)) {
                        return Err(CoreError::NonFinite);
                    }

                    let factor = (0.9 * err.powf(-0.2)).clamp(0.2, 5.0);
                    if err <= 1.0 {
                        // Snap to the stop so float drift cannot strand a sliver step.
                        t = if hits_target { t_target } else { t + h };
                        y = y_new;
                        k1 = k7;
                        if !truncated {
                            h_prop = h * factor;
                        }
                    } else {
                        h_prop = h * factor;
                    }
                }
                out.push(y.clone());
            }
            Ok(out)
        }
    };
}

dp54_impl!(
    integrate_real3,
    Vector3<f64>,
    |v: &f64| v.abs(),
    |x: f64| x,
    |v: &f64| v.is_finite()
);

dp54_impl!(
    integrate_complex,
    DVector<Complex64>,
    |v: &Complex64| v.norm(),
    |x: f64| Complex64::new(x, 0.0),
    |v: &Complex64| v.re.is_finite() && v.im.is_finite()
);
