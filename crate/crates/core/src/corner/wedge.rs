//! Dirichlet solutions on the straight wedge `{0 < φ < θ}` with monomial
//! data `Σ c·t^β` on each edge.
//!
//! Each monomial is solved by separation of variables. Homogeneous solutions
//! `r^{mπ/θ} sin(mπφ/θ)` are not added: the result is the canonical
//! particular solution.

use num_complex::Complex64;

use super::angle::{is_resonant, Angle};
use super::HarmonicEvaluator;
use crate::error::{Error, Result};
use crate::logpower::{Exponent, LogPowerSeries, LpTerm};
use crate::lsurf::{cpow, logmap, LPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeTerm {
    pub beta: Exponent,
    pub coeff: f64,
}

impl EdgeTerm {
    pub fn new(beta: Exponent, coeff: f64) -> Self {
        Self { beta, coeff }
    }
}

/// Data `t ↦ Σ c·t^β` on the edge `φ = 0` (`edge0`) and on `φ = θ` (`edge1`).
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeProblem {
    pub theta: Angle,
    pub edge0: Vec<EdgeTerm>,
    pub edge1: Vec<EdgeTerm>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Constant,
    Edge0,
    Edge0Resonant { n: i64 },
    Edge1,
    Edge1Resonant { n: i64 },
}

#[derive(Debug, Clone, Copy)]
struct Part {
    beta: f64,
    coeff: f64,
    kind: Kind,
}

#[derive(Debug, Clone)]
pub struct WedgeSolution {
    theta: f64,
    parts: Vec<Part>,
    expansion: LogPowerSeries,
}

pub fn wedge_solve(p: &WedgeProblem) -> Result<WedgeSolution> {
    let theta = p.theta.value();
    let c0: f64 = p.edge0.iter().filter(|t| t.beta.is_zero()).map(|t| t.coeff).sum();
    let c1: f64 = p.edge1.iter().filter(|t| t.beta.is_zero()).map(|t| t.coeff).sum();
    if c0 != c1 {
        return Err(Error::InvalidInput(format!(
            "constant terms differ between the edges ({c0} vs {c1})"
        )));
    }
    let mut parts = Vec::new();
    let mut terms = Vec::new();
    if c0 != 0.0 {
        parts.push(Part { beta: 0.0, coeff: c0, kind: Kind::Constant });
        terms.push(LpTerm { exponent: Exponent::zero(), poly: vec![Complex64::new(c0, 0.0)] });
    }
    for (edge, data) in [(0, &p.edge0), (1, &p.edge1)] {
        for t in data.iter().filter(|t| !t.beta.is_zero()) {
            let beta = t.beta.value();
            let c = t.coeff;
            let kind = if is_resonant(&p.theta, &t.beta)? {
                let n = (beta * theta / std::f64::consts::PI).round() as i64;
                if edge == 0 {
                    Kind::Edge0Resonant { n }
                } else {
                    Kind::Edge1Resonant { n }
                }
            } else if edge == 0 {
                Kind::Edge0
            } else {
                Kind::Edge1
            };
            let part = Part { beta, coeff: c, kind };
            terms.push(LpTerm { exponent: t.beta, poly: part.poly(theta) });
            parts.push(part);
        }
    }
    Ok(WedgeSolution { theta, parts, expansion: LogPowerSeries::new(terms)? })
}

impl Part {
    /// Coefficients of `f` in the basis `z^β, z^β·λ`.
    fn poly(&self, theta: f64) -> Vec<Complex64> {
        let bt = self.beta * theta;
        let c = self.coeff;
        let i = Complex64::i();
        match self.kind {
            Kind::Constant => vec![Complex64::new(c, 0.0)],
            Kind::Edge0 => vec![(1.0 + i * (bt.cos() / bt.sin())) * c],
            Kind::Edge0Resonant { .. } => vec![Complex64::new(c, 0.0), i * (c / theta)],
            Kind::Edge1 => vec![-i * (c / bt.sin())],
            Kind::Edge1Resonant { n } => {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                vec![Complex64::new(0.0, 0.0), -i * (sign * c / theta)]
            }
        }
    }

    fn u(&self, theta: f64, r: f64, phi: f64) -> f64 {
        let b = self.beta;
        let c = self.coeff;
        match self.kind {
            Kind::Constant => c,
            Kind::Edge0 => c * r.powf(b) * (b * (theta - phi)).sin() / (b * theta).sin(),
            Kind::Edge0Resonant { .. } => {
                let rb = r.powf(b);
                c * (rb * (b * phi).cos()
                    - rb / theta * ((b * phi).sin() * r.ln() + phi * (b * phi).cos()))
            }
            Kind::Edge1 => c * r.powf(b) * (b * phi).sin() / (b * theta).sin(),
            Kind::Edge1Resonant { n } => {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                sign * c * r.powf(b) / theta * ((b * phi).sin() * r.ln() + phi * (b * phi).cos())
            }
        }
    }
}

impl WedgeSolution {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The exact log-power expansion of `f`.
    pub fn expansion(&self) -> &LogPowerSeries {
        &self.expansion
    }

    pub fn is_log_free(&self) -> bool {
        self.expansion.is_log_free()
    }

    /// `f` rotated so that the edge `φ = 0` sits at `φ = alpha`:
    /// `z ↦ f((1, −alpha)·z)`.
    pub fn rotated(&self, alpha: f64) -> RotatedWedge<'_> {
        RotatedWedge { inner: self, alpha }
    }
}

impl HarmonicEvaluator for WedgeSolution {
    fn f(&self, z: LPoint) -> Result<Complex64> {
        let lam = logmap(z);
        let mut acc = Complex64::new(0.0, 0.0);
        for t in self.expansion.terms() {
            let mut p = Complex64::new(0.0, 0.0);
            let mut pw = Complex64::new(1.0, 0.0);
            for c in &t.poly {
                p += c * pw;
                pw *= lam;
            }
            acc += p * cpow(t.exponent.value(), z);
        }
        Ok(acc)
    }

    /// Trigonometric closed form, independent of `f`.
    fn u(&self, z: LPoint) -> Result<f64> {
        Ok(self.parts.iter().map(|p| p.u(self.theta, z.r(), z.phi())).sum())
    }
}

/// A wedge solution whose first edge is the ray `φ = alpha`.
#[derive(Debug, Clone, Copy)]
pub struct RotatedWedge<'a> {
    inner: &'a WedgeSolution,
    alpha: f64,
}

impl HarmonicEvaluator for RotatedWedge<'_> {
    fn f(&self, z: LPoint) -> Result<Complex64> {
        self.inner.f(LPoint::new(z.r(), z.phi() - self.alpha)?)
    }

    fn u(&self, z: LPoint) -> Result<f64> {
        self.inner.u(LPoint::new(z.r(), z.phi() - self.alpha)?)
    }
}
