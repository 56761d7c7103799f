//! Corner data and its reduction to `k(ψ) = k(χ) = 1` with `ψ` the identity.
//!
//! The boundary curves are `Γ = ψ((0, ε))` and `Γ′ = χ((0, ε))`, carrying
//! the data `u(ψ(t)) = g0(t)` and `u(χ(t)) = g1(t)`. Normalization pulls
//! back by `p^{1/k(ψ)}`, applies `ψ₁⁻¹`, then pulls back by `p^{1/k(χ₂)}`;
//! the data are reparametrized where a curve's parameter changes.

use super::angle::Angle;
use crate::error::{Error, Result};
use crate::germs::Germ;
use crate::lsurf::{pow, LPoint};
use crate::series::{PowerSeries, PuiseuxSeries};

#[derive(Debug, Clone)]
pub struct CornerSpec {
    pub psi: Germ,
    pub chi: Germ,
    pub theta: Angle,
    pub g0: PuiseuxSeries,
    pub g1: PuiseuxSeries,
    pub eps: f64,
}

impl CornerSpec {
    pub fn new(
        psi: Germ,
        chi: Germ,
        theta: Angle,
        g0: PuiseuxSeries,
        g1: PuiseuxSeries,
        eps: f64,
    ) -> Result<Self> {
        if psi.k() == 0 || chi.k() == 0 {
            return Err(Error::InvalidInput("boundary germs need k >= 1".into()));
        }
        if !g0.has_real_coefficients() || !g1.has_real_coefficients() {
            return Err(Error::InvalidInput("boundary data must have real coefficients".into()));
        }
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::InvalidInput(format!("eps must be positive, got {eps}")));
        }
        let opening = chi.a().phi() - psi.a().phi();
        if (opening - theta.value()).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "arg a(chi) - arg a(psi) = {opening} does not match the declared angle {}",
                theta.value()
            )));
        }
        Ok(Self { psi, chi, theta, g0, g1, eps })
    }

    /// Whether `ψ`, `χ` have `k = 1` and unit leading factors.
    pub fn is_normalized(&self) -> bool {
        self.psi.k() == 1
            && self.chi.k() == 1
            && (self.psi.a().r() - 1.0).abs() <= 1e-10
            && (self.chi.a().r() - 1.0).abs() <= 1e-10
    }
}

/// `forward = p^{1/k(χ₂)} ∘ ψ₁⁻¹ ∘ p^{1/k(ψ)}` and its inverse.
#[derive(Debug, Clone)]
pub struct Transform {
    k_psi: u32,
    k_chi2: u32,
    psi1: Option<Germ>,
    psi1_inv: Option<Germ>,
}

impl Transform {
    pub fn identity() -> Self {
        Self { k_psi: 1, k_chi2: 1, psi1: None, psi1_inv: None }
    }

    pub fn is_identity(&self) -> bool {
        self.k_psi == 1 && self.k_chi2 == 1 && self.psi1.is_none()
    }

    pub fn k_psi(&self) -> u32 {
        self.k_psi
    }

    pub fn k_chi2(&self) -> u32 {
        self.k_chi2
    }

    /// Original coordinates to normalized ones.
    pub fn forward(&self, z: LPoint) -> Result<LPoint> {
        let mut w = pow(1.0 / self.k_psi as f64, z)?;
        if let Some(g) = &self.psi1_inv {
            w = g.apply(w)?;
        }
        pow(1.0 / self.k_chi2 as f64, w)
    }

    /// Normalized coordinates back to the original ones.
    pub fn backward(&self, w: LPoint) -> Result<LPoint> {
        let mut z = pow(self.k_chi2 as f64, w)?;
        if let Some(g) = &self.psi1 {
            z = g.apply(z)?;
        }
        pow(self.k_psi as f64, z)
    }
}

#[derive(Debug, Clone)]
pub struct NormalizedCorner {
    pub corner: CornerSpec,
    pub transform: Transform,
}

/// `p^{1/n} ∘ φ` for a germ with `n | k(φ)`.
fn root_germ(phi: &Germ, n: u32, order: usize) -> Result<Germ> {
    if n == 1 {
        return Ok(phi.clone());
    }
    if !phi.k().is_multiple_of(n) {
        return Err(Error::InvalidGerm(format!("{n} does not divide k = {}", phi.k())));
    }
    let h = phi.h().one_plus_pow(1.0 / n as f64, order)?;
    let mut coeffs = h.coeffs().to_vec();
    coeffs[0] = num_complex::Complex64::new(0.0, 0.0);
    Germ::new(
        pow(1.0 / n as f64, phi.a())?,
        phi.k() / n,
        PowerSeries::new(coeffs, phi.radius())?,
        phi.radius(),
    )
}

/// `φ ∘ p^m` for a positive integer `m`.
fn reparam_germ(phi: &Germ, m: u32) -> Result<Germ> {
    let h = phi.h().spread(m as usize);
    let radius = phi.radius().powf(1.0 / m as f64);
    Germ::new(phi.a(), phi.k() * m, h.with_radius(radius)?, radius)
}

/// Rescales the parameter of a `k = 1` curve to `t ↦ χ(t/|a|)` so that
/// `|a| = 1`, moving the data along: `g ↦ g(t/|a|)`.
fn unit_modulus(chi: Germ, g: PuiseuxSeries, eps: f64) -> Result<(Germ, PuiseuxSeries, f64)> {
    let rho = chi.a().r();
    if (rho - 1.0).abs() <= 1e-15 {
        return Ok((chi, g, eps));
    }
    let h: Vec<_> = chi.h().coeffs().iter().enumerate().map(|(n, c)| c * rho.powi(-(n as i32))).collect();
    let radius = chi.radius() * rho;
    let chi = Germ::new(LPoint::new(1.0, chi.a().phi())?, 1, PowerSeries::new(h, radius)?, radius)?;
    let d = g.denominator() as f64;
    let gc: Vec<_> = g.coeffs().iter().enumerate().map(|(n, c)| c * rho.powf(-(n as f64) / d)).collect();
    let g = PuiseuxSeries::new(g.denominator(), gc, g.radius() * rho)?;
    Ok((chi, g, eps.min(eps * rho)))
}

/// Reduces to `ψ = id`, `k(χ) = 1`, `|a(χ)| = 1`; the angle is divided by
/// `k(ψ)·k(χ₂)`.
pub fn normalize(corner: &CornerSpec, order: usize) -> Result<NormalizedCorner> {
    let straight_psi = corner.psi.is_straight() && corner.psi.a() == LPoint::one();
    if straight_psi && corner.chi.k() == 1 {
        let (chi, g1, eps) = unit_modulus(corner.chi.clone(), corner.g1.clone(), corner.eps)?;
        let out = CornerSpec { chi, g1, eps, ..corner.clone() };
        return Ok(NormalizedCorner { corner: out, transform: Transform::identity() });
    }
    let k_psi = corner.psi.k();
    let (mut chi, mut g1, mut eps) = (corner.chi.clone(), corner.g1.clone(), corner.eps);
    if chi.k() % k_psi != 0 {
        chi = reparam_germ(&chi, k_psi)?;
        g1 = g1.compose_int_pow(k_psi)?;
        eps = eps.min(eps.powf(1.0 / k_psi as f64));
    }
    let psi1 = root_germ(&corner.psi, k_psi, order)?;
    let chi1 = root_germ(&chi, k_psi, order)?;
    let psi1_inv = psi1.invert_to(order)?;
    let chi2 = psi1_inv.compose_to(&chi1, order)?;
    let k_chi2 = chi2.k();
    let chi3 = root_germ(&chi2, k_chi2, order)?;
    let g0 = corner.g0.compose_int_pow(k_chi2)?;
    eps = eps.min(eps.powf(1.0 / k_chi2 as f64));
    let (chi3, g1, eps) = unit_modulus(chi3, g1, eps)?;
    let psi3 = Germ::rotation(0.0, chi3.radius())?;
    let theta = corner.theta.divided(k_psi * k_chi2)?;
    let out = CornerSpec { psi: psi3, chi: chi3, theta, g0, g1, eps };
    let transform = Transform { k_psi, k_chi2, psi1: Some(psi1), psi1_inv: Some(psi1_inv) };
    Ok(NormalizedCorner { corner: out, transform })
}
