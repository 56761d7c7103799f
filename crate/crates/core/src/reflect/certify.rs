use num_complex::Complex64;
use rand::{Rng, SeedableRng};

use super::state::{Membership, ReflectionSystem};
use crate::corner::HarmonicEvaluator;
use crate::error::{Error, Result};
use crate::logpower::LogPowerSeries;
use crate::lsurf::LPoint;
use crate::par;

/// Sampled constants for `|f − γ| ≤ C_k |z|^{R′}` on `D_k ∩ B(s_k)`.
#[derive(Debug, Clone)]
pub struct ExtensionCertificate {
    pub r: f64,
    pub r_prime: f64,
    pub s: f64,
    /// Observed `C_k`, `k = 1, …, k_max`.
    pub c_k: Vec<f64>,
    pub a: f64,
    pub t_k: Vec<f64>,
    /// Largest `|f − γ| / |z|^S` seen on each window `D_k ∩ B(t_k)`.
    pub window_ratio: Vec<f64>,
    pub window_violations: usize,
}

impl ExtensionCertificate {
    pub fn cascade_holds(&self) -> bool {
        self.c_k.iter().enumerate().all(|(i, c)| *c <= self.a.powi(i as i32 + 1))
    }

    pub fn passed(&self) -> bool {
        self.cascade_holds() && self.window_violations == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CertifyConfig {
    pub samples_per_level: usize,
    pub seed: u64,
}

/// Upper limit for `R′`: the minimum over
/// (i) the next exponent of the full expansion above `R`,
/// (ii) `(⌊Rd⌋ + 1)/d`, and (iii) `⌊R − α⌋ + α + 1` for `α ∈ supp γ`.
pub fn r_prime_limit(expansion: &LogPowerSeries, gamma: &LogPowerSeries, d: u32, r: f64) -> f64 {
    let mut lim = ((r * d as f64).floor() + 1.0) / d as f64;
    if let Some(next) = expansion.support().iter().map(|e| e.value()).find(|a| *a > r) {
        lim = lim.min(next);
    }
    for a in gamma.support() {
        let a = a.value();
        lim = lim.min((r - a).floor() + a + 1.0);
    }
    lim
}

/// Absolute rounding allowance for comparing `f` against `γ`.
fn allowance(f: Complex64, g: Complex64) -> f64 {
    64.0 * f64::EPSILON * (f.norm() + g.norm())
}

fn sample_level_points<R: Rng>(
    sys: &ReflectionSystem,
    rng: &mut R,
    k: usize,
    radius: f64,
    count: usize,
) -> Vec<LPoint> {
    let theta = sys.theta.value();
    let span = 2f64.powi(k as i32 - 1) * theta;
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let phi = sys.alpha + span * rng.random_range(0.001..0.999);
        let r = radius * 10f64.powf(-4.0 * rng.random::<f64>());
        let Ok(z) = LPoint::new(r, phi) else { continue };
        if matches!(sys.membership(z), Membership::Level(j) if j <= k) {
            out.push(z);
        }
    }
    out
}

/// Largest radius `ρ ≤ start` with `|z|^{α+N−R′}·(|log|z|| + φ_max)^M ≤ 1`
/// for every `α ∈ supp γ`, `N = ⌊R − α⌋ + 1`.
fn sampling_radius(gamma: &LogPowerSeries, r: f64, r_prime: f64, phi_max: f64, start: f64) -> f64 {
    let m = gamma.log_degree() as f64;
    let ok = |rho: f64| {
        gamma.support().iter().all(|a| {
            let a = a.value();
            let p = a + (r - a).floor() + 1.0 - r_prime;
            p * rho.ln() + m * (rho.ln().abs() + phi_max).ln() <= 0.0
        })
    };
    let mut rho = start;
    let mut i = 0;
    while !ok(rho) && i < 2000 {
        rho *= 0.5;
        i += 1;
    }
    rho
}

/// Samples `C_k`, fits `A = max(1.1·max_k C_k^{1/k}, 1.1)`, and checks
/// `|f − γ| ≤ |z|^S` on `D_k ∩ B(t_k)` with `t_k = A^{−k/(R′−S)}`.
///
/// `R′` is the midpoint between `R` and [`r_prime_limit`]; `S = (R + R′)/2`.
pub fn certify_expansion(
    sys: &ReflectionSystem,
    f: &dyn HarmonicEvaluator,
    expansion: &LogPowerSeries,
    gamma: &LogPowerSeries,
    r: f64,
    cfg: CertifyConfig,
) -> Result<ExtensionCertificate> {
    let d = sys.h0.denominator();
    let r_prime = 0.5 * (r + r_prime_limit(expansion, gamma, d, r));
    let s = 0.5 * (r + r_prime);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
    let k_max = sys.k_max();
    let theta = sys.theta.value();

    let mut c_k = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let phi_max = sys.alpha.abs() + 2f64.powi(k as i32 - 1) * theta;
        let rho = sampling_radius(gamma, r, r_prime, phi_max, sys.state(k).s_k * 0.999);
        let pts = sample_level_points(sys, &mut rng, k, rho, cfg.samples_per_level);
        let ratios = par::try_map(&pts, |z| -> Result<f64> {
            let fz = f.f(*z)?;
            let gz = gamma.eval(*z);
            Ok(((fz - gz).norm() - allowance(fz, gz)).max(0.0) / z.r().powf(r_prime))
        })?;
        c_k.push(ratios.into_iter().fold(0.0, f64::max));
    }
    let fit = c_k
        .iter()
        .enumerate()
        .map(|(i, c)| c.powf(1.0 / (i as f64 + 1.0)))
        .fold(0.0, f64::max);
    let a = (1.1 * fit).max(1.1);

    let mut t_k = Vec::with_capacity(k_max);
    let mut window_ratio = Vec::with_capacity(k_max);
    let mut window_violations = 0;
    for k in 1..=k_max {
        let t = a.powf(-(k as f64) / (r_prime - s));
        if !(t > 1e-300) {
            return Err(Error::WindowEmpty { k });
        }
        t_k.push(t);
        let radius = t.min(sys.state(k).s_k * 0.999);
        let pts = sample_level_points(sys, &mut rng, k, radius, cfg.samples_per_level);
        let checks = par::try_map(&pts, |z| -> Result<(f64, bool)> {
            let fz = f.f(*z)?;
            let gz = gamma.eval(*z);
            let diff = (fz - gz).norm();
            let bound = z.r().powf(s);
            Ok((diff / bound, diff <= bound + allowance(fz, gz)))
        })?;
        window_ratio.push(checks.iter().map(|c| c.0).fold(0.0, f64::max));
        window_violations += checks.iter().filter(|c| !c.1).count();
    }
    Ok(ExtensionCertificate { r, r_prime, s, c_k, a, t_k, window_ratio, window_violations })
}
