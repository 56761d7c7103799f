//! Points of the Riemann surface of the logarithm and standard quadratic
//! domains.
//!
//! A point is stored in polar form `(r, φ)` with `r > 0` and `φ` an
//! unreduced real. The sheet is part of the point: `(1, 0)` and `(1, 2π)`
//! are different points even though they project to the same complex
//! number.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LPoint {
    r: f64,
    phi: f64,
}

impl LPoint {
    pub fn new(r: f64, phi: f64) -> Result<Self> {
        if r > 0.0 && r.is_finite() && phi.is_finite() {
            Ok(Self { r, phi })
        } else {
            Err(Error::InvalidPoint { r, phi })
        }
    }

    /// The unit `(1, 0)`.
    pub const fn one() -> Self {
        Self { r: 1.0, phi: 0.0 }
    }

    /// Unit-modulus point `(1, θ)`.
    pub fn rotation(theta: f64) -> Result<Self> {
        Self::new(1.0, theta)
    }

    /// Lifts a nonzero complex number using the principal argument in `(-π, π]`.
    pub fn from_complex(c: Complex64) -> Result<Self> {
        Self::new(c.norm(), c.arg())
    }

    /// Lifts a nonzero complex number to the sheet whose argument is closest
    /// to `reference`.
    pub fn from_complex_near(c: Complex64, reference: f64) -> Result<Self> {
        let a = c.arg();
        let turns = ((reference - a) / (2.0 * PI)).round();
        Self::new(c.norm(), a + turns * 2.0 * PI)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Inverse under [`mul`]: `(1/r, -φ)`.
    pub fn inv(&self) -> Result<Self> {
        Self::new(1.0 / self.r, -self.phi)
    }
}

/// The multiplication map `m((r₁, φ₁), (r₂, φ₂)) = (r₁r₂, φ₁ + φ₂)`.
pub fn mul(a: LPoint, b: LPoint) -> Result<LPoint> {
    LPoint::new(a.r * b.r, a.phi + b.phi)
}

/// The power map `p^ρ(r, φ) = (r^ρ, ρφ)`, `ρ ≥ 0`.
pub fn pow(rho: f64, z: LPoint) -> Result<LPoint> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(Error::InvalidInput(format!("power exponent {rho} must be >= 0")));
    }
    if rho == 0.0 {
        return Ok(LPoint::one());
    }
    LPoint::new(z.r.powf(rho), rho * z.phi)
}

/// The conjugation `τ(r, φ) = (r, -φ)`.
pub fn tau(z: LPoint) -> LPoint {
    LPoint { r: z.r, phi: -z.phi }
}

/// `log z = log r + iφ`.
pub fn logmap(z: LPoint) -> Complex64 {
    Complex64::new(z.r.ln(), z.phi)
}

/// `z^α = exp(α log z)` evaluated on `L`.
pub fn cpow(alpha: f64, z: LPoint) -> Complex64 {
    if alpha == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(z.r.powf(alpha), alpha * z.phi)
}

/// The projection `e(r, φ) = r·e^{iφ}` to `ℂ*`.
pub fn project(z: LPoint) -> Complex64 {
    Complex64::from_polar(z.r, z.phi)
}

/// `{(r, φ) : 0 < r < c·exp(-C·√|φ|)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticDomain {
    pub c: f64,
    pub big_c: f64,
}

impl QuadraticDomain {
    pub fn new(c: f64, big_c: f64) -> Result<Self> {
        if c > 0.0 && big_c > 0.0 && c.is_finite() && big_c.is_finite() {
            Ok(Self { c, big_c })
        } else {
            Err(Error::InvalidInput(format!(
                "quadratic domain constants must be positive, got c = {c}, C = {big_c}"
            )))
        }
    }

    /// Radius bound at argument `phi`.
    pub fn boundary(&self, phi: f64) -> f64 {
        self.c * (-self.big_c * phi.abs().sqrt()).exp()
    }

    pub fn contains(&self, z: LPoint) -> bool {
        z.r < self.boundary(z.phi)
    }
}
