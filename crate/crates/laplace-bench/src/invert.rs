//! Pole-residue inversion of strictly proper rational Laplace transforms.

use num_complex::Complex64;

use crate::error::LaplaceError;
use crate::poly::{Poly, RationalFunction};

#[derive(Debug, Clone, Copy)]
pub struct PoleTerm {
    pub pole: Complex64,
    pub coeff: Complex64,
    /// Power of t multiplying the exponential (0 for simple poles,
    /// 1 for the double-pole contribution).
    pub t_power: u32,
}

/// Finite sum `r(t) = Re sum_k coeff_k t^{p_k} exp(pole_k t)`.
#[derive(Debug, Clone)]
pub struct PoleResidueForm {
    pub terms: Vec<PoleTerm>,
}

impl PoleResidueForm {
    pub fn eval(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|term| {
                let factor = match term.t_power {
                    0 => 1.0,
                    p => t.powi(p as i32),
                };
                (term.coeff * (term.pole * t).exp() * factor).re
            })
            .sum()
    }

    /// The same sum without discarding the imaginary part; conjugate
    /// symmetry of the inputs should make this vanish.
    pub fn eval_complex(&self, t: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|term| {
                let factor = match term.t_power {
                    0 => 1.0,
                    p => t.powi(p as i32),
                };
                term.coeff * (term.pole * t).exp() * factor
            })
            .sum()
    }

    /// Laplace transform of the represented sum, for reconstruction checks.
    fn transform(&self, s: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|term| {
                let shift = s - term.pole;
                match term.t_power {
                    0 => term.coeff / shift,
                    1 => term.coeff / (shift * shift),
                    p => {
                        // k! / (s-p)^{k+1}; only reachable if support widens.
                        let mut fact = 1.0;
                        for j in 2..=p {
                            fact *= j as f64;
                        }
                        term.coeff * fact / shift.powu(p + 1)
                    }
                }
            })
            .sum()
    }
}

/// Sum |c_k| |z|^k, the scale against which a residual means "z is a root
/// of a polynomial with relatively perturbed coefficients".
fn residual_scale(poly: &Poly, z: Complex64) -> f64 {
    let az = z.norm();
    let mut acc = 0.0f64;
    for c in poly.coeffs.iter().rev() {
        acc = acc * az + c.norm();
    }
    acc
}

fn is_backward_stable(poly: &Poly, z: Complex64) -> bool {
    poly.eval(z).norm() <= 8.0 * f64::EPSILON * residual_scale(poly, z) + 1e-300
}

/// A value below this floor is indistinguishable from an exact zero of a
/// polynomial whose coefficients carry a few rounding errors each — as the
/// numerators assembled by polynomial algebra or the characteristic
/// recursion do.
fn numerator_floor(poly: &Poly, z: Complex64) -> f64 {
    64.0 * f64::EPSILON * residual_scale(poly, z) + 1e-300
}

/// Aberth-Ehrlich simultaneous root iteration with Newton polish.
///
/// Termination is per-approximant: either the update stalls at rounding
/// level or the residual is small enough that the point is an exact root
/// of a relatively perturbed polynomial. The latter is the only reachable
/// state near a multiple root, where update sizes plateau at the width of
/// the root's noise basin instead of shrinking.
fn find_roots(poly: &Poly) -> Result<Vec<Complex64>, LaplaceError> {
    let n = poly.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let deriv = poly.derivative();
    let lead = poly.coeffs[n];

    // Cauchy bound on root magnitudes.
    let bound = 1.0
        + poly.coeffs[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);

    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7;
            Complex64::from_polar(0.6 * bound, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..500 {
        let mut all_done = true;
        for i in 0..n {
            let p = poly.eval(z[i]);
            let settled = p.norm() <= 8.0 * f64::EPSILON * residual_scale(&poly, z[i]) + 1e-300;
            if p.norm() == 0.0 {
                continue;
            }
            let dp = deriv.eval(z[i]);
            let newton = if dp.norm() > 0.0 { p / dp } else { Complex64::new(1e-3, 1e-3) };
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.norm() < 1e-300 {
                        Complex64::new(1e150, 0.0)
                    } else {
                        1.0 / diff
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[i] -= step;
            if !settled && step.norm() / (1.0 + z[i].norm()) >= 1e-14 {
                all_done = false;
            }
        }
        if all_done {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(LaplaceError::RootFinding);
    }

    // Newton polish sharpens simple roots. A point that already sits at
    // backward-error level must not be touched: near a multiple root the
    // Newton correction divides by a nearly vanishing derivative and would
    // throw the point out of the basin it has found.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            if is_backward_stable(poly, *zi) {
                break;
            }
            let p = poly.eval(*zi);
            let dp = deriv.eval(*zi);
            if dp.norm() < 1e-100 {
                break;
            }
            let step = p / dp;
            if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 1.0 {
                break;
            }
            *zi -= step;
        }
    }
    Ok(z)
}

/// Residues are always evaluated from the original numerator and
/// denominator: at a simple pole the residue of N/D is N(p)/D'(p), and
/// Horner evaluation keeps that ratio accurate even when N and D share a
/// (near-)common factor — the shared factor then makes N(p) itself tiny,
/// so a removable pole simply yields a negligible term that is discarded.
/// Dividing shared factors out explicitly would instead commit each
/// computed root's error (up to the square root of machine epsilon for a
/// numerically multiple root) into every surviving residue.
pub fn invert_rational(rf: &RationalFunction) -> Result<PoleResidueForm, LaplaceError> {
    let num_deg = if rf.num.is_zero() { 0 } else { rf.num.degree() };
    let den_deg = rf.den.degree();
    if num_deg >= den_deg || den_deg > 8 {
        return Err(LaplaceError::DegreeUnsupported { num: num_deg, den: den_deg });
    }
    if rf.num.is_zero() {
        return Ok(PoleResidueForm { terms: Vec::new() });
    }

    let num = rf.num.clone();
    let den = rf.den.clone();
    let poles = find_roots(&den)?;

    // Group poles into clusters. A numerically double root scatters its
    // computed pair by about sqrt(machine epsilon) relative to its
    // magnitude, so the radius scales with the pole.
    let mut used = vec![false; poles.len()];
    let mut terms = Vec::new();
    let d1 = den.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    for i in 0..poles.len() {
        if used[i] {
            continue;
        }
        let mut cluster = vec![poles[i]];
        used[i] = true;
        let radius = 1e-7 * poles[i].norm().max(1.0);
        for j in i + 1..poles.len() {
            if !used[j] && (poles[j] - poles[i]).norm() < radius {
                cluster.push(poles[j]);
                used[j] = true;
            }
        }
        match cluster.len() {
            1 => {
                let p = cluster[0];
                let nval = num.eval(p);
                // A numerator value at rounding level means this pole is
                // removable: a zero cancels it to working precision.
                if nval.norm() > numerator_floor(&num, p) {
                    terms.push(PoleTerm { pole: p, coeff: nval / d1.eval(p), t_power: 0 });
                }
            }
            2 => {
                // Confluent residues about the cluster center:
                // R(s) ~ A/(s-p)^2 + B/(s-p) with
                // A = 2N/D'', B = 2N'/D'' - (2/3) N D'''/D''^2,
                // valid where D'(p) = 0. The root pair straddles the
                // derivative's root far more tightly than the computed
                // pair straddles its mean, so Newton on D' pins p down.
                let mut p = (cluster[0] + cluster[1]) * 0.5;
                let start = p;
                for _ in 0..5 {
                    let dd = d1.eval(p);
                    let ddd = d2.eval(p);
                    if ddd.norm() < 1e-280 {
                        break;
                    }
                    let step = dd / ddd;
                    if (p - step - start).norm() > 1e-5 * start.norm().max(1.0) {
                        break;
                    }
                    p -= step;
                }
                let num_d1 = num.derivative();
                let zero = Complex64::new(0.0, 0.0);
                let mut n0 = num.eval(p);
                if n0.norm() <= numerator_floor(&num, p) {
                    n0 = zero;
                }
                let mut n1 = num_d1.eval(p);
                if n1.norm() <= numerator_floor(&num_d1, p) {
                    n1 = zero;
                }
                let dd2 = d2.eval(p);
                let dd3 = d3.eval(p);
                let a = 2.0 * n0 / dd2;
                let b = 2.0 * n1 / dd2 - (2.0 / 3.0) * n0 * dd3 / (dd2 * dd2);
                if a != zero {
                    terms.push(PoleTerm { pole: p, coeff: a, t_power: 1 });
                }
                if b != zero {
                    terms.push(PoleTerm { pole: p, coeff: b, t_power: 0 });
                }
            }
            count => return Err(LaplaceError::RepeatedRootCluster { count }),
        }
    }

    // Drop negligible terms; these are the removable poles, whose residues
    // come out at the rounding floor of the surviving ones.
    let coeff_scale = terms
        .iter()
        .map(|t| t.coeff.norm())
        .fold(0.0f64, f64::max);
    terms.retain(|t| t.coeff.norm() > 1e-11 * coeff_scale);

    // Real-coefficient inputs must produce a real signal: pair conjugate
    // poles and symmetrize their residues so the imaginary parts cancel
    // identically rather than to roundoff.
    if rf.num.is_real(1e-12) && rf.den.is_real(1e-12) {
        symmetrize(&mut terms);
    }

    let form = PoleResidueForm { terms };

    // Reconstruction check against the original transform.
    let scale = poles_scale(&form);
    let mut worst = 0.0f64;
    for k in 0..20 {
        let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.37) / 20.0;
        let s = Complex64::from_polar(2.0 * scale, angle);
        // Keep the sample away from the poles themselves.
        if form.terms.iter().any(|t| (s - t.pole).norm() < 0.05 * scale) {
            continue;
        }
        let direct = rf.eval(s);
        let rebuilt = form.transform(s);
        let dev = (rebuilt - direct).norm() / direct.norm().max(1e-30);
        worst = worst.max(dev);
    }
    if worst > 1e-8 {
        return Err(LaplaceError::Reconstruction { deviation: worst });
    }
    Ok(form)
}

fn poles_scale(form: &PoleResidueForm) -> f64 {
    form.terms
        .iter()
        .map(|t| t.pole.norm())
        .fold(1.0, f64::max)
}

fn symmetrize(terms: &mut [PoleTerm]) {
    let n = terms.len();
    let mut paired = vec![false; n];
    for i in 0..n {
        if paired[i] {
            continue;
        }
        let scale = terms[i].pole.norm().max(1.0);
        if terms[i].pole.im.abs() < 1e-9 * scale {
            // Real pole: force the residue real and the pole onto the axis.
            terms[i].pole.im = 0.0;
            terms[i].coeff.im = 0.0;
            paired[i] = true;
            continue;
        }
        if let Some(j) = (i + 1..n).find(|&j| {
            !paired[j]
                && terms[j].t_power == terms[i].t_power
                && (terms[j].pole - terms[i].pole.conj()).norm() < 1e-6 * scale
        }) {
            let pole = (terms[i].pole + terms[j].pole.conj()) * 0.5;
            let coeff = (terms[i].coeff + terms[j].coeff.conj()) * 0.5;
            terms[i].pole = pole;
            terms[i].coeff = coeff;
            terms[j].pole = pole.conj();
            terms[j].coeff = coeff.conj();
            paired[i] = true;
            paired[j] = true;
        }
    }
}
