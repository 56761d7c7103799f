//! Germs `φ(z) = m(a, m(p^k(z), 1 + h(z)))` on `L`.
//!
//! The germ is stored as its data `(a, k, h, radius)`; `k ≥ 1` germs can be
//! composed on the right, and `k = 1` germs form a group.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lsurf::{mul, pow, project, tau, LPoint};
use crate::series::PowerSeries;

/// Radius used for germs that are defined everywhere.
pub const SENTINEL_RADIUS: f64 = 1e12;

const SAMPLE_ANGLES: usize = 64;
const MAX_HALVINGS: usize = 200;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct Germ {
    a: LPoint,
    k: u32,
    h: PowerSeries,
    radius: f64,
}

impl Germ {
    /// Validates `h(0) = 0` and shrinks `radius` by halving until
    /// `|h| ≤ 1/2` on the sampled circles `radius·{1, 1/2, 1/4}`.
    pub fn new(a: LPoint, k: u32, h: PowerSeries, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidGerm(format!("radius must be positive, got {radius}")));
        }
        let h0 = h.coeff(0);
        if h0.norm() > 1e-13 {
            return Err(Error::InvalidGerm(format!("h(0) must vanish, got {h0}")));
        }
        let mut coeffs = h.coeffs().to_vec();
        coeffs[0] = ZERO;
        let mut h = PowerSeries::new(coeffs, radius)?;
        let mut radius = radius;
        if !h.is_zero() {
            let mut halvings = 0;
            while !small_on_circles(&h, radius) {
                halvings += 1;
                if halvings > MAX_HALVINGS {
                    return Err(Error::InvalidGerm("could not certify |h| <= 1/2".into()));
                }
                radius *= 0.5;
            }
            h = h.with_radius(radius)?;
        }
        Ok(Self { a, k, h, radius })
    }

    pub fn identity() -> Self {
        Self::rotation(0.0, SENTINEL_RADIUS).expect("identity germ is valid")
    }

    /// `z ↦ (1, θ)·z` on the given radius.
    pub fn rotation(theta: f64, radius: f64) -> Result<Self> {
        Self::new(LPoint::rotation(theta)?, 1, PowerSeries::zero(radius)?, radius)
    }

    pub fn a(&self) -> LPoint {
        self.a
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn h(&self) -> &PowerSeries {
        &self.h
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn is_invertible(&self) -> bool {
        self.k == 1
    }

    /// True when `h = 0` and `k = 1`, i.e. the germ is a straight ray map.
    pub fn is_straight(&self) -> bool {
        self.k == 1 && self.h.is_zero()
    }

    /// Same germ data on a different radius (re-certified by sampling).
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        Self::new(self.a, self.k, self.h.clone(), radius)
    }

    pub fn apply(&self, z: LPoint) -> Result<LPoint> {
        if z.r() >= self.radius {
            return Err(Error::OutOfRadius { modulus: z.r(), radius: self.radius });
        }
        let factor = if self.h.is_zero() {
            LPoint::one()
        } else {
            LPoint::from_complex(ONE + self.h.eval(project(z)))?
        };
        mul(self.a, mul(pow(self.k as f64, z)?, factor)?)
    }

    /// `2|a|·|z|^k`, the growth bound for [`Germ::apply`].
    pub fn growth_bound(&self, z: LPoint) -> f64 {
        2.0 * self.a.r() * z.r().powi(self.k as i32)
    }

    /// `|arg φ(z) − arg a(φ)|`, failing if it exceeds `|arg z| + π/2`.
    pub fn arg_shift_bound(&self, z: LPoint) -> Result<f64> {
        if self.k != 1 {
            return Err(Error::NotInvertible { k: self.k });
        }
        let w = self.apply(z)?;
        let shift = (w.phi() - self.a.phi()).abs();
        if shift > z.phi().abs() + FRAC_PI_2 {
            return Err(Error::BoundViolated(format!(
                "argument shift {shift} exceeds |arg z| + pi/2 = {}",
                z.phi().abs() + FRAC_PI_2
            )));
        }
        Ok(shift)
    }

    /// The projected map `s(z) = e(a)·z^k·(1 + h(z))` as a power series.
    pub fn projected_series(&self, order: usize) -> Result<PowerSeries> {
        let k = self.k as usize;
        let c = project(self.a);
        let mut coeffs = vec![ZERO; order + 1];
        for n in 0..=order {
            if n < k {
                continue;
            }
            let j = n - k;
            coeffs[n] = c * if j == 0 { ONE } else { self.h.coeff(j) };
        }
        PowerSeries::new(coeffs, self.radius)
    }

    fn natural_order(&self, other: &Self) -> usize {
        self.h.order().max(other.h.order())
    }

    /// `self ∘ psi`, truncated at the larger of the two `h` orders.
    pub fn compose(&self, psi: &Germ) -> Result<Germ> {
        self.compose_to(psi, self.natural_order(psi))
    }

    /// `self ∘ psi` truncated at `order`, on the radius
    /// `min{r(φ), r(ψ)} / (10·max{1, |a(ψ)|})`.
    pub fn compose_to(&self, psi: &Germ, order: usize) -> Result<Germ> {
        if psi.k == 0 {
            return Err(Error::InvalidGerm("right factor of a composition needs k >= 1".into()));
        }
        let a = mul(self.a, pow(self.k as f64, psi.a)?)?;
        let k = self
            .k
            .checked_mul(psi.k)
            .ok_or_else(|| Error::InvalidGerm("k overflow".into()))?;
        let radius = 0.1 * self.radius.min(psi.radius) / psi.a.r().max(1.0);
        let h = if self.h.is_zero() && psi.h.is_zero() {
            PowerSeries::zero(radius)?
        } else {
            let left = psi.h.one_plus_pow(self.k as f64, order)?;
            let s = psi.projected_series(order)?;
            let inner = self.h.compose(&s, order)?;
            let right = inner.add(&PowerSeries::constant(ONE, radius)?);
            let prod = left.mul(&right, order);
            let mut coeffs = prod.coeffs().to_vec();
            coeffs[0] -= ONE;
            PowerSeries::new(coeffs, radius)?
        };
        Germ::new(a, k, h, radius)
    }

    /// The group inverse of a `k = 1` germ.
    ///
    /// With `u = z·(1 + h(z))`, Lagrange inversion gives
    /// `z = u·(1 + H(u))`, `H_m = [z^m](1+h)^{-(m+1)} / (m+1)`; the inverse
    /// germ has `h̃_n = H_n·e(a)^{-n}` and leading factor `a^{-1}`.
    pub fn invert(&self) -> Result<Germ> {
        self.invert_to(self.h.order())
    }

    /// [`Germ::invert`] truncated at `order`.
    pub fn invert_to(&self, order: usize) -> Result<Germ> {
        if self.k != 1 {
            return Err(Error::NotInvertible { k: self.k });
        }
        let b = self.a.inv()?;
        let radius = self.a.r() * self.radius / 3.0;
        if self.h.is_zero() {
            return Germ::new(b, 1, PowerSeries::zero(radius)?, radius);
        }
        let c_inv = ONE / project(self.a);
        let mut coeffs = vec![ZERO; order + 1];
        let mut scale = ONE;
        for m in 1..=order {
            scale *= c_inv;
            let p = self.h.one_plus_pow(-((m + 1) as f64), m)?;
            coeffs[m] = p.coeff(m) / (m + 1) as f64 * scale;
        }
        Germ::new(b, 1, PowerSeries::new(coeffs, radius)?, radius)
    }

    /// `τ ∘ φ ∘ τ`.
    pub fn tau_conj(&self) -> Germ {
        Germ { a: tau(self.a), k: self.k, h: self.h.conj(), radius: self.radius }
    }
}

fn small_on_circles(h: &PowerSeries, radius: f64) -> bool {
    [1.0, 0.5, 0.25].iter().all(|f| {
        let rho = radius * f;
        (0..SAMPLE_ANGLES).all(|j| {
            let t = 2.0 * PI * j as f64 / SAMPLE_ANGLES as f64;
            h.eval(Complex64::from_polar(rho, t)).norm() <= 0.5
        })
    })
}
