//! Finite generalized log-power series `Σ P_α(λ)·z^α`, `λ = log z`.
//!
//! Exponents carry an optional exact rational alongside their float value;
//! two exponents are merged exactly when both are rational and within
//! `1e-12` otherwise.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::germs::Germ;
use crate::lsurf::{cpow, logmap, project, LPoint};
use crate::series::PowerSeries;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const MERGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub struct Exponent {
    value: f64,
    exact: Option<Rational64>,
}

impl Exponent {
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("exponent denominator is zero".into()));
        }
        Self::from_ratio(Rational64::new(num, den))
    }

    pub fn from_ratio(r: Rational64) -> Result<Self> {
        let value = *r.numer() as f64 / *r.denom() as f64;
        if value < 0.0 {
            return Err(Error::InvalidInput(format!("exponent {r} is negative")));
        }
        Ok(Self { value, exact: Some(r) })
    }

    pub fn real(value: f64) -> Result<Self> {
        if !(value >= 0.0) || !value.is_finite() {
            return Err(Error::InvalidInput(format!("exponent {value} must be finite and >= 0")));
        }
        Ok(Self { value, exact: None })
    }

    pub fn zero() -> Self {
        Self { value: 0.0, exact: Some(Rational64::from_integer(0)) }
    }

    pub fn integer(n: i64) -> Self {
        Self { value: n as f64, exact: Some(Rational64::from_integer(n)) }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn exact(&self) -> Option<Rational64> {
        self.exact
    }

    pub fn is_zero(&self) -> bool {
        match self.exact {
            Some(r) => *r.numer() == 0,
            None => self.value == 0.0,
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }

    /// Exact comparison when both are rational, tolerance `1e-12` otherwise.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self.exact, other.exact) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ if (self.value - other.value).abs() <= MERGE_TOL => Ordering::Equal,
            _ => self.value.total_cmp(&other.value),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            value: self.value + other.value,
            exact: match (self.exact, other.exact) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }

    pub fn scale_ratio(&self, r: Rational64) -> Self {
        match self.exact {
            Some(a) => {
                let e = a * r;
                Self { value: *e.numer() as f64 / *e.denom() as f64, exact: Some(e) }
            }
            None => Self { value: self.value * (*r.numer() as f64 / *r.denom() as f64), exact: None },
        }
    }

    /// Multiplication by a float; exactness survives only for zero.
    pub fn scale(&self, rho: f64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { value: self.value * rho, exact: None }
    }
}

impl PartialEq for Exponent {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            None => write!(f, "{:.17e}", self.value),
        }
    }
}

/// One term `P(λ)·z^α`; `poly[j]` is the coefficient of `λ^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpTerm {
    pub exponent: Exponent,
    pub poly: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LogPowerSeries {
    terms: Vec<LpTerm>,
}

impl LogPowerSeries {
    /// Merges equal exponents, drops zero polynomials, sorts by exponent.
    pub fn new(terms: Vec<LpTerm>) -> Result<Self> {
        let mut sorted = terms;
        sorted.sort_by(|a, b| a.exponent.compare(&b.exponent));
        let mut merged: Vec<LpTerm> = Vec::with_capacity(sorted.len());
        for t in sorted {
            if t.poly.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
                return Err(Error::InvalidInput("non-finite log-power coefficient".into()));
            }
            match merged.last_mut() {
                Some(last) if last.exponent.approx_eq(&t.exponent) => {
                    if last.poly.len() < t.poly.len() {
                        last.poly.resize(t.poly.len(), ZERO);
                    }
                    for (j, c) in t.poly.iter().enumerate() {
                        last.poly[j] += c;
                    }
                }
                _ => merged.push(t),
            }
        }
        let mut out = Vec::with_capacity(merged.len());
        for mut t in merged {
            while t.poly.last() == Some(&ZERO) {
                t.poly.pop();
            }
            if t.poly.is_empty() {
                continue;
            }
            if t.exponent.is_zero() && t.poly.len() > 1 {
                return Err(Error::InvalidInput("the z^0 term must have a constant polynomial".into()));
            }
            out.push(t);
        }
        Ok(Self { terms: out })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·λ^deg·z^α`.
    pub fn monomial(exponent: Exponent, deg: usize, c: Complex64) -> Result<Self> {
        let mut poly = vec![ZERO; deg + 1];
        poly[deg] = c;
        Self::new(vec![LpTerm { exponent, poly }])
    }

    pub fn terms(&self) -> &[LpTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, z: LPoint) -> Complex64 {
        let lam = logmap(z);
        let mut acc = ZERO;
        for t in &self.terms {
            let mut p = ZERO;
            let mut pw = ONE;
            for c in &t.poly {
                p += c * pw;
                pw *= lam;
            }
            acc += p * cpow(t.exponent.value(), z);
        }
        acc
    }

    /// Least exponent of the support.
    pub fn nu(&self) -> Result<Exponent> {
        self.terms.first().map(|t| t.exponent).ok_or(Error::NoSupport)
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.iter().map(|t| t.exponent).collect()
    }

    /// Largest power of `λ` present.
    pub fn log_degree(&self) -> usize {
        self.terms.iter().map(|t| t.poly.len() - 1).max().unwrap_or(0)
    }

    pub fn is_log_free(&self) -> bool {
        self.terms.iter().all(|t| t.poly.len() == 1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(self.terms.iter().chain(other.terms.iter()).cloned().collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| LpTerm { exponent: t.exponent, poly: t.poly.iter().map(|p| p * c).collect() })
            .collect();
        Self::new(terms).expect("scaling keeps the series valid")
    }

    pub fn mul_lp(&self, other: &Self) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut poly = vec![ZERO; a.poly.len() + b.poly.len() - 1];
                for (i, x) in a.poly.iter().enumerate() {
                    for (j, y) in b.poly.iter().enumerate() {
                        poly[i + j] += x * y;
                    }
                }
                terms.push(LpTerm { exponent: a.exponent.add(&b.exponent), poly });
            }
        }
        Self::new(terms)
    }

    /// `g ∘ p^ρ`: `(α, Σ c_m λ^m) ↦ (αρ, Σ c_m ρ^m λ^m)`.
    pub fn compose_pow(&self, rho: f64) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidInput(format!("power {rho} must be positive")));
        }
        self.map_pow(rho, |e| e.scale(rho))
    }

    /// [`LogPowerSeries::compose_pow`] with an exact rational power.
    pub fn compose_pow_ratio(&self, rho: Rational64) -> Result<Self> {
        if *rho.numer() <= 0 {
            return Err(Error::InvalidInput(format!("power {rho} must be positive")));
        }
        let rf = *rho.numer() as f64 / *rho.denom() as f64;
        self.map_pow(rf, |e| e.scale_ratio(rho))
    }

    fn map_pow(&self, rho: f64, exp: impl Fn(&Exponent) -> Exponent) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| LpTerm {
                exponent: exp(&t.exponent),
                poly: t.poly.iter().enumerate().map(|(m, c)| c * rho.powi(m as i32)).collect(),
            })
            .collect();
        Self::new(terms)
    }

    /// Keeps exactly the terms with `α ≤ R`.
    pub fn truncate(&self, r: f64) -> Self {
        Self { terms: self.terms.iter().filter(|t| t.exponent.value() <= r).cloned().collect() }
    }

    /// Drops every `λ^j`, `j ≥ 1`, keeping the constant polynomial parts.
    pub fn without_logs(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| LpTerm { exponent: t.exponent, poly: vec![t.poly[0]] })
            .collect();
        Self::new(terms).expect("dropping logs keeps the series valid")
    }

    /// Display form: each term as `(α, a_α, monic P_α)`.
    pub fn normalized(&self) -> Vec<(Exponent, Complex64, Vec<Complex64>)> {
        self.terms
            .iter()
            .map(|t| {
                let lead = *t.poly.last().expect("terms are nonempty");
                (t.exponent, lead, t.poly.iter().map(|c| c / lead).collect())
            })
            .collect()
    }
}

/// One term `z^{kα}·Σ_ℓ g_ℓ(z)·λ^ℓ` of a log-power series composed with a germ.
#[derive(Debug, Clone)]
pub struct ComposedTerm {
    pub exponent: Exponent,
    pub coeffs: Vec<PowerSeries>,
}

#[derive(Debug, Clone)]
pub struct ComposedLogPower {
    pub k: u32,
    pub terms: Vec<ComposedTerm>,
}

impl ComposedLogPower {
    pub fn eval(&self, z: LPoint) -> Complex64 {
        let lam = logmap(z);
        let w = project(z);
        let mut acc = ZERO;
        for t in &self.terms {
            let mut p = ZERO;
            let mut pw = ONE;
            for g in &t.coeffs {
                p += g.eval(w) * pw;
                pw *= lam;
            }
            acc += p * cpow(t.exponent.value(), z);
        }
        acc
    }

    /// Expands the power-series coefficients into a plain log-power series.
    pub fn flatten(&self) -> Result<LogPowerSeries> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let n_max = t.coeffs.iter().map(|g| g.order()).max().unwrap_or(0);
            for n in 0..=n_max {
                let poly: Vec<Complex64> = t.coeffs.iter().map(|g| g.coeff(n)).collect();
                terms.push(LpTerm { exponent: t.exponent.add(&Exponent::integer(n as i64)), poly });
            }
        }
        LogPowerSeries::new(terms)
    }
}

/// Sampled check of `sup|g_ℓ| ≤ 2^{m+α}(|arg a|+3)^m` for each monomial.
#[derive(Debug, Clone)]
pub struct LpCertificate {
    /// False when the germ is not of the form `k = 1`, `|a| = 1`.
    pub applicable: bool,
    pub entries: Vec<LpBoundEntry>,
}

#[derive(Debug, Clone)]
pub struct LpBoundEntry {
    pub alpha: f64,
    pub m: usize,
    pub l: usize,
    pub observed: f64,
    pub bound: f64,
}

impl LpCertificate {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.observed <= e.bound)
    }
}

const CERT_ANGLES: usize = 64;

/// `g ∘ φ`: each monomial `z^α λ^m` becomes
/// `z^{kα} Σ_ℓ k^ℓ C(m,ℓ) a^α (1+h)^α (log a + log(1+h))^{m−ℓ} λ^ℓ`.
pub fn compose_germ_lp(
    g: &LogPowerSeries,
    phi: &Germ,
    order: usize,
) -> Result<(ComposedLogPower, LpCertificate)> {
    let k = phi.k();
    if k == 0 {
        return Err(Error::InvalidGerm("composition needs k(φ) ≥ 1".into()));
    }
    let a = phi.a();
    let radius = phi.radius();
    let h = phi.h();
    let log_one_plus_h = h.one_plus_log(order)?;
    let shift = log_one_plus_h.add(&PowerSeries::constant(logmap(a), radius)?);
    let applicable = k == 1 && (a.r() - 1.0).abs() <= 1e-10;
    let m_max = g.log_degree();
    let mut shift_pows = vec![PowerSeries::constant(ONE, radius)?];
    for j in 1..=m_max {
        shift_pows.push(shift_pows[j - 1].mul(&shift, order));
    }
    let samples = cert_samples(radius);
    let mut terms = Vec::with_capacity(g.terms().len());
    let mut entries = Vec::new();
    for t in g.terms() {
        let alpha = t.exponent.value();
        let base = h.one_plus_pow(alpha, order)?.scale(cpow(alpha, a));
        let m_deg = t.poly.len() - 1;
        let mut coeffs = vec![PowerSeries::zero(radius)?; m_deg + 1];
        for (m, cm) in t.poly.iter().enumerate() {
            for l in 0..=m {
                let factor = (k as f64).powi(l as i32) * binomial(m, l);
                let g_ml = base.mul(&shift_pows[m - l], order).scale(Complex64::new(factor, 0.0));
                if applicable {
                    let observed = samples.iter().map(|w| g_ml.eval(*w).norm()).fold(0.0, f64::max);
                    let bound = 2f64.powf(m as f64 + alpha) * (a.phi().abs() + 3.0).powi(m as i32);
                    entries.push(LpBoundEntry { alpha, m, l, observed, bound });
                }
                if *cm != ZERO {
                    coeffs[l] = coeffs[l].add(&g_ml.scale(*cm));
                }
            }
        }
        terms.push(ComposedTerm {
            exponent: t.exponent.scale_ratio(Rational64::from_integer(k as i64)),
            coeffs,
        });
    }
    Ok((ComposedLogPower { k, terms }, LpCertificate { applicable, entries }))
}

fn cert_samples(radius: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(3 * CERT_ANGLES);
    for f in [0.5, 0.25, 0.125] {
        let rho = radius.min(1e6) * f;
        for j in 0..CERT_ANGLES {
            out.push(Complex64::from_polar(rho, 2.0 * PI * j as f64 / CERT_ANGLES as f64));
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
