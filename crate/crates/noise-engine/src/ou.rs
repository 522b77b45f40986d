//! Stationary Ornstein-Uhlenbeck process with autocorrelation
//! `(g / 4 tau) exp(-|dt| / tau)`.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::NoiseError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OUNoiseParams {
    /// Asymptotic dephasing rate g; the stationary variance is g / (4 tau).
    pub noise_power: f64,
    /// Correlation time tau.
    pub memory_time: f64,
}

impl OUNoiseParams {
    pub fn new(noise_power: f64, memory_time: f64) -> Result<Self, NoiseError> {
        if !noise_power.is_finite() || noise_power < 0.0 {
            return Err(NoiseError::InvalidParameter { name: "noise_power", value: noise_power });
        }
        if !memory_time.is_finite() || memory_time <= 0.0 {
            return Err(NoiseError::InvalidParameter { name: "memory_time", value: memory_time });
        }
        Ok(Self { noise_power, memory_time })
    }

    pub fn stationary_variance(&self) -> f64 {
        self.noise_power / (4.0 * self.memory_time)
    }

    /// Analytic autocorrelation `<eta(t) eta(t + dt)>` of the stationary process.
    pub fn autocorrelation(&self, dt: f64) -> f64 {
        self.stationary_variance() * (-dt.abs() / self.memory_time).exp()
    }
}

#[derive(Debug, Clone)]
pub struct OUPath {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

/// Exact-in-distribution update of the OU process over a step `dt`:
/// `eta' = eta d + sqrt(var (1 - d^2)) xi` with `d = exp(-dt / tau)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct OUStepper {
    decay: f64,
    kick_sd: f64,
    init_sd: f64,
}

impl OUStepper {
    pub fn new(params: &OUNoiseParams, dt: f64) -> Self {
        let var = params.stationary_variance();
        let decay = (-dt / params.memory_time).exp();
        Self {
            decay,
            kick_sd: (var * (1.0 - decay * decay)).sqrt(),
            init_sd: var.sqrt(),
        }
    }

    pub fn initial(&self, rng: &mut ChaCha12Rng) -> f64 {
        let xi: f64 = StandardNormal.sample(rng);
        self.init_sd * xi
    }

    pub fn advance(&self, eta: f64, rng: &mut ChaCha12Rng) -> f64 {
        let xi: f64 = StandardNormal.sample(rng);
        eta * self.decay + self.kick_sd * xi
    }
}

/// Sample one stationary OU path on the uniform grid `0, dt, ..., n dt`
/// with `n = round(t_max / dt)`. The discretization is exact in
/// distribution for any step size.
pub fn sample_ou_path(
    params: &OUNoiseParams,
    dt: f64,
    t_max: f64,
    seed: u64,
) -> Result<OUPath, NoiseError> {
    if !dt.is_finite() || dt <= 0.0 {
        return Err(NoiseError::InvalidParameter { name: "dt", value: dt });
    }
    if !t_max.is_finite() || t_max < 0.0 {
        return Err(NoiseError::InvalidParameter { name: "t_max", value: t_max });
    }
    let n = (t_max / dt).round() as usize;
    let stepper = OUStepper::new(params, dt);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);

    let mut times = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    let mut eta = stepper.initial(&mut rng);
    times.push(0.0);
    values.push(eta);
    for k in 1..=n {
        eta = stepper.advance(eta, &mut rng);
        times.push(k as f64 * dt);
        values.push(eta);
    }
    Ok(OUPath { times, values })
}
