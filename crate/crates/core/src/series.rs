//! Truncated power series and Puiseux series on `L`.
//!
//! A [`PowerSeries`] is a finite coefficient list together with the radius
//! on which the underlying function is claimed to be holomorphic. A
//! [`PuiseuxSeries`] with denominator `d` stores a power series in
//! `w = z^{1/d}`; its radius is measured in `z`.
//!
//! Arithmetic is polynomial arithmetic on the stored coefficients. The only
//! operations that cut coefficients are the ones that take an explicit
//! `order` (products inside compositions, binomial and logarithmic series).

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::germs::Germ;
use crate::lsurf::{cpow, LPoint};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
    radius: f64,
    bound: Option<f64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>, radius: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("power series needs at least one coefficient".into()));
        }
        if !(radius > 0.0) || radius.is_nan() {
            return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite power series coefficient".into()));
        }
        Ok(Self { coeffs, radius, bound: None })
    }

    pub fn zero(radius: f64) -> Result<Self> {
        Self::new(vec![ZERO], radius)
    }

    pub fn constant(c: Complex64, radius: f64) -> Result<Self> {
        Self::new(vec![c], radius)
    }

    /// The series `z` (coefficients `[0, 1]`).
    pub fn identity(radius: f64) -> Result<Self> {
        Self::new(vec![ZERO, ONE], radius)
    }

    /// Attaches a claimed sup bound on the disc of radius `radius`.
    pub fn with_bound(mut self, bound: f64) -> Result<Self> {
        if !(bound > 0.0) || !bound.is_finite() {
            return Err(Error::InvalidInput(format!("sup bound must be positive, got {bound}")));
        }
        self.bound = Some(bound);
        Ok(self)
    }

    pub fn with_radius(mut self, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || radius.is_nan() {
            return Err(Error::InvalidInput(format!("radius must be positive, got {radius}")));
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    /// Highest stored index.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn bound(&self) -> Option<f64> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// Ascending-order sum `Σ aₙ wⁿ` at a complex argument.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let mut acc = ZERO;
        let mut pw = ONE;
        for c in &self.coeffs {
            acc += c * pw;
            pw *= w;
        }
        acc
    }

    /// `Σ |aₙ| ρⁿ`, a bound for the polynomial on the closed disc of radius `ρ`.
    pub fn majorant(&self, rho: f64) -> f64 {
        let mut acc = 0.0;
        let mut pw = 1.0;
        for c in &self.coeffs {
            acc += c.norm() * pw;
            pw *= rho;
        }
        acc
    }

    /// Coefficients cut or zero-padded to length `order + 1`.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Self { coeffs, radius: self.radius, bound: self.bound }
    }

    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
            radius: self.radius,
            bound: self.bound,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            radius: self.radius,
            bound: self.bound.map(|b| b * c.norm()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self { coeffs, radius: self.radius.min(other.radius), bound: None }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    /// Product truncated at `order`.
    pub fn mul(&self, other: &Self, order: usize) -> Self {
        let coeffs = mul_coeffs(&self.coeffs, &other.coeffs, order);
        Self { coeffs, radius: self.radius.min(other.radius), bound: None }
    }

    /// `self ∘ inner` truncated at `order`; `inner` must vanish at 0.
    /// The radius of the result is left to the caller (set to `inner`'s).
    pub fn compose(&self, inner: &Self, order: usize) -> Result<Self> {
        if inner.coeff(0) != ZERO {
            return Err(Error::InvalidInput("inner series must vanish at 0".into()));
        }
        let inner_c: Vec<Complex64> = inner.coeffs.iter().take(order + 1).copied().collect();
        let mut acc = vec![ZERO; order + 1];
        for a in self.coeffs.iter().take(order + 1).rev() {
            acc = mul_coeffs(&acc, &inner_c, order);
            acc[0] += a;
        }
        Self::new(acc, inner.radius)
    }

    /// `(1 + self)^α` for a series vanishing at 0, principal branch.
    pub fn one_plus_pow(&self, alpha: f64, order: usize) -> Result<Self> {
        if self.coeff(0) != ZERO {
            return Err(Error::InvalidInput("binomial series needs h(0) = 0".into()));
        }
        let mut f = vec![ZERO; order + 1];
        f[0] = ONE;
        for n in 1..=order {
            let mut s = ZERO;
            for j in 1..=n {
                let hj = self.coeff(j);
                if hj != ZERO {
                    s += hj * f[n - j] * ((alpha + 1.0) * j as f64 - n as f64);
                }
            }
            f[n] = s / n as f64;
        }
        Self::new(f, self.radius)
    }

    /// `log(1 + self)` for a series vanishing at 0, principal branch.
    pub fn one_plus_log(&self, order: usize) -> Result<Self> {
        if self.coeff(0) != ZERO {
            return Err(Error::InvalidInput("logarithmic series needs h(0) = 0".into()));
        }
        let mut l = vec![ZERO; order + 1];
        for n in 1..=order {
            let mut s = ZERO;
            for j in 1..n {
                s += self.coeff(j) * l[n - j] * (n - j) as f64;
            }
            l[n] = self.coeff(n) - s / n as f64;
        }
        Self::new(l, self.radius)
    }

    /// Replaces `z` by `z^m` (spreads the coefficients).
    pub fn spread(&self, m: usize) -> Self {
        let m = m.max(1);
        let mut coeffs = vec![ZERO; (self.coeffs.len() - 1) * m + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * m] = *c;
        }
        Self { coeffs, radius: self.radius.powf(1.0 / m as f64), bound: self.bound }
    }
}

fn mul_coeffs(a: &[Complex64], b: &[Complex64], order: usize) -> Vec<Complex64> {
    let len = (a.len() + b.len() - 1).min(order + 1);
    let mut out = vec![ZERO; len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if *ai == ZERO {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Cauchy tail bound for a Puiseux series bounded by `c` on `B(radius)`:
/// `c·(|z|/radius)^{(N+1)/d} / (1 − (|z|/radius)^{1/d})`.
pub fn tail_bound(c: f64, d: u32, radius: f64, n: usize, z: LPoint) -> Result<f64> {
    if z.r() >= radius {
        return Err(Error::OutOfRadius { modulus: z.r(), radius });
    }
    if d == 0 {
        return Err(Error::InvalidInput("denominator must be positive".into()));
    }
    let q = (z.r() / radius).powf(1.0 / d as f64);
    Ok(c * q.powi(n as i32 + 1) / (1.0 - q))
}

/// `Σ aₙ z^{n/d}` with the coefficients stored as a power series in `z^{1/d}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PuiseuxSeries {
    d: u32,
    base: PowerSeries,
    radius: f64,
}

impl PuiseuxSeries {
    pub fn new(d: u32, coeffs: Vec<Complex64>, radius: f64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("denominator must be positive".into()));
        }
        let base = PowerSeries::new(coeffs, base_radius(radius, d))?;
        Ok(Self { d, base, radius })
    }

    pub fn from_power_series(d: u32, base: PowerSeries) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("denominator must be positive".into()));
        }
        let radius = base.radius().powi(d as i32);
        Ok(Self { d, base, radius })
    }

    pub fn zero(radius: f64) -> Result<Self> {
        Self::new(1, vec![ZERO], radius)
    }

    /// Builds a series from `(num, den, coefficient)` terms `c·z^{num/den}`,
    /// using the least common denominator.
    pub fn from_terms(terms: &[(u32, u32, Complex64)], radius: f64) -> Result<Self> {
        let mut d = 1u32;
        for &(_, den, _) in terms {
            if den == 0 {
                return Err(Error::InvalidInput("term denominator must be positive".into()));
            }
            d = d.lcm(&den);
        }
        let mut coeffs = vec![ZERO];
        for &(num, den, c) in terms {
            let idx = (num * (d / den)) as usize;
            if idx >= coeffs.len() {
                coeffs.resize(idx + 1, ZERO);
            }
            coeffs[idx] += c;
        }
        Self::new(d, coeffs, radius)
    }

    pub fn denominator(&self) -> u32 {
        self.d
    }

    pub fn base(&self) -> &PowerSeries {
        &self.base
    }

    pub fn coeffs(&self) -> &[Complex64] {
        self.base.coeffs()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn bound(&self) -> Option<f64> {
        self.base.bound()
    }

    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        let base = self.base.clone().with_radius(base_radius(radius, self.d))?;
        Ok(Self { d: self.d, base, radius })
    }

    pub fn with_bound(&self, bound: f64) -> Result<Self> {
        Ok(Self { d: self.d, base: self.base.clone().with_bound(bound)?, radius: self.radius })
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.coeffs().iter().all(|c| c.im == 0.0)
    }

    /// Nonzero terms as `(n, d, aₙ)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32, Complex64)> + '_ {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(move |(n, c)| (n, self.d, *c))
    }

    /// `Σ aₙ z^{n/d}` on `L`, summed in ascending `n`.
    pub fn eval(&self, z: LPoint) -> Result<Complex64> {
        if z.r() >= self.radius {
            return Err(Error::OutOfRadius { modulus: z.r(), radius: self.radius });
        }
        Ok(self.eval_unchecked(z))
    }

    /// Evaluates the stored polynomial without the radius check.
    pub fn eval_unchecked(&self, z: LPoint) -> Complex64 {
        let d = self.d as f64;
        let mut acc = ZERO;
        for (n, c) in self.coeffs().iter().enumerate() {
            if *c != ZERO {
                acc += c * cpow(n as f64 / d, z);
            }
        }
        acc
    }

    /// `Σ |aₙ| radius^{n/d}`: sup bound of the stored polynomial on `B(radius)`.
    pub fn majorant(&self) -> f64 {
        self.base.majorant(self.base.radius())
    }

    /// Tail bound of the truncation at base order `n`, using the attached
    /// sup bound or else the majorant.
    pub fn tail_bound_at(&self, n: usize, z: LPoint) -> Result<f64> {
        let c = self.bound().unwrap_or_else(|| self.majorant());
        tail_bound(c, self.d, self.radius, n, z)
    }

    /// Same series written with denominator `d_new` (a multiple of `d`).
    pub fn rescaled(&self, d_new: u32) -> Result<Self> {
        if d_new == 0 || !d_new.is_multiple_of(self.d) {
            return Err(Error::InvalidInput(format!(
                "denominator {d_new} is not a multiple of {}",
                self.d
            )));
        }
        let m = (d_new / self.d) as usize;
        let mut base = self.base.spread(m);
        base = base.with_radius(base_radius(self.radius, d_new))?;
        Ok(Self { d: d_new, base, radius: self.radius })
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        let d = self.d.lcm(&other.d);
        Ok((self.rescaled(d)?, other.rescaled(d)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let radius = a.radius.min(b.radius);
        let base = a.base.add(&b.base).with_radius(base_radius(radius, a.d))?;
        Ok(Self { d: a.d, base, radius })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { d: self.d, base: self.base.scale(c), radius: self.radius }
    }

    /// Exact product of the stored polynomials.
    pub fn mul_series(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let radius = a.radius.min(b.radius);
        let order = a.base.order() + b.base.order();
        let base = a.base.mul(&b.base, order).with_radius(base_radius(radius, a.d))?;
        Ok(Self { d: a.d, base, radius })
    }

    /// `z ↦ conj(g(τ z))`: conjugated coefficients, same denominator and radius.
    pub fn conj_tau(&self) -> Self {
        Self { d: self.d, base: self.base.conj(), radius: self.radius }
    }

    /// `g ∘ p^m` for a positive integer `m`: exponents multiplied by `m`.
    pub fn compose_int_pow(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("power must be positive".into()));
        }
        let radius = self.radius.powf(1.0 / m as f64);
        let base = self.base.spread(m as usize).with_radius(base_radius(radius, self.d))?;
        Ok(Self { d: self.d, base, radius })
    }

    /// `g ∘ φ` for a germ with `k(φ) ≥ 1`, truncated at base order `order`.
    ///
    /// With `w = z^{1/d}` the composite is
    /// `Σ aₙ a(φ)^{n/d} w^{k·n} (1 + h(w^d))^{n/d}`, so the denominator is
    /// unchanged. The radius is `min{r(φ), (radius/(2|a(φ)|))^{1/k(φ)}}`.
    pub fn compose_germ(&self, phi: &Germ, order: usize) -> Result<Self> {
        let k = phi.k();
        if k == 0 {
            return Err(Error::InvalidGerm("composition needs k(φ) ≥ 1".into()));
        }
        let d = self.d as usize;
        let a = phi.a();
        let radius = phi
            .radius()
            .min((self.radius / (2.0 * a.r())).powf(1.0 / k as f64));
        let h_order = order / d;
        let mut out = vec![ZERO; order + 1];
        for (n, c) in self.coeffs().iter().enumerate() {
            if *c == ZERO {
                continue;
            }
            let shift = k as usize * n;
            if shift > order {
                continue;
            }
            let rho = n as f64 / d as f64;
            let lead = c * cpow(rho, a);
            let binom = phi.h().one_plus_pow(rho, h_order)?;
            for (j, bj) in binom.coeffs().iter().enumerate() {
                let idx = shift + j * d;
                if idx > order {
                    break;
                }
                out[idx] += lead * bj;
            }
        }
        let mut result = Self::new(self.d, out, radius)?;
        if let Some(m) = self.bound() {
            result = result.with_bound(m)?;
        }
        Ok(result)
    }
}

fn base_radius(radius: f64, d: u32) -> f64 {
    if d == 1 {
        radius
    } else {
        radius.powf(1.0 / d as f64)
    }
}
