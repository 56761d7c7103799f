use std::f64::consts::FRAC_PI_2;

use super::state::ReflectionSystem;
use crate::error::{Error, Result};
use crate::lsurf::QuadraticDomain;

const K_SCAN: usize = 80;
const MARGIN: f64 = 1e-9;

/// `log₊ x = max{1, log x}`.
pub fn log_plus(x: f64) -> f64 {
    if x > 0.0 {
        x.ln().max(1.0)
    } else {
        1.0
    }
}

/// Constants of the holomorphy envelope `{φ > α, 0 < r < K^{−log₊(φ−α)}}`
/// and of the quadratic domain `c·exp(−C√(φ−α))` inside it.
#[derive(Debug, Clone, Copy)]
pub struct Envelope {
    pub big_k: f64,
    pub ln_k: f64,
    pub q: QuadraticDomain,
    pub alpha: f64,
    pub theta: f64,
    pub s: f64,
}

/// Far edge of the `k`-th window: `2^{k−1}θ − π/2`.
pub fn window_reach(theta: f64, k: usize) -> f64 {
    2f64.powi(k as i32 - 1) * theta - FRAC_PI_2
}

impl Envelope {
    /// Smallest `k` with `x < 2^{k−1}θ − π/2`.
    pub fn window_index(&self, x: f64) -> usize {
        let mut k = 1;
        while x >= window_reach(self.theta, k) {
            k += 1;
        }
        k
    }

    /// Radius of the first window reaching `x = φ − α`: `s·100^{1−k*(x)}`.
    pub fn window_radius(&self, x: f64) -> f64 {
        self.s * 100f64.powi(1 - self.window_index(x) as i32)
    }

    /// `K^{−log₊ x}`.
    pub fn envelope_radius(&self, x: f64) -> f64 {
        (-self.ln_k * log_plus(x)).exp()
    }

    /// `c·exp(−C√x)`.
    pub fn quadratic_radius(&self, x: f64) -> f64 {
        self.q.boundary(x)
    }

    /// Counts violations of the two containments at `x` in `[lo, hi]`:
    /// `(K-envelope ⊄ windows, quadratic domain ⊄ K-envelope)`.
    pub fn check(&self, lo: f64, hi: f64, samples: usize) -> (usize, usize) {
        let mut xs: Vec<f64> = (0..samples)
            .map(|i| lo + (hi - lo) * i as f64 / (samples.max(2) - 1) as f64)
            .collect();
        for k in 1..=K_SCAN {
            let xk = window_reach(self.theta, k);
            if xk >= lo && xk <= hi {
                xs.extend([xk, xk * (1.0 - 1e-15), xk * (1.0 + 1e-15)]);
            }
        }
        let mut cover = 0;
        let mut quad = 0;
        for x in xs.into_iter().filter(|x| *x >= lo && *x <= hi) {
            let env = self.envelope_radius(x);
            if env > self.window_radius(x) {
                cover += 1;
            }
            if self.quadratic_radius(x) > env {
                quad += 1;
            }
        }
        (cover, quad)
    }
}

/// Fits `K` so that the windows cover the `K`-envelope, then takes
/// `c = 1/K`, `C = log K` (valid because `log x ≤ √x`).
pub fn envelope(sys: &ReflectionSystem) -> Result<Envelope> {
    if sys.k_max() < 3 {
        return Err(Error::InsufficientSteps { needed: 3, got: sys.k_max() });
    }
    envelope_from(sys.alpha, sys.theta.value(), sys.s1())
}

/// [`envelope`] from the raw constants `α`, `θ`, `s₁`.
pub fn envelope_from(alpha: f64, theta: f64, s: f64) -> Result<Envelope> {
    if !(theta > 0.0) || !(s > 0.0) {
        return Err(Error::InvalidInput("envelope needs theta > 0 and s > 0".into()));
    }
    // on (x_{k−1}, x_k] the window radius is s·100^{1−k}; the worst point is the
    // left end, where log₊ is smallest
    let mut ln_k = 100f64.ln() / 2f64.ln();
    for k in 1..=K_SCAN {
        let need = (k as f64 - 1.0) * 100f64.ln() - s.ln();
        let left = if k == 1 { 0.0 } else { window_reach(theta, k - 1) };
        ln_k = ln_k.max(need / log_plus(left));
    }
    let ln_k = ln_k * (1.0 + MARGIN) + MARGIN;
    let big_k = ln_k.exp();
    let q = QuadraticDomain::new(1.0 / big_k, ln_k)?;
    Ok(Envelope { big_k, ln_k, q, alpha, theta, s })
}
