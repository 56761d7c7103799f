use std::f64::consts::FRAC_PI_2;

use num_integer::Integer;

use crate::corner::{Angle, CornerSpec};
use crate::error::{Error, Result};
use crate::germs::Germ;
use crate::lsurf::{tau, LPoint};
use crate::series::PuiseuxSeries;

// points this close to `Γ` in the pulled-back argument count as on it
const ON_CURVE: f64 = 1e-12;

/// One level of the reflection iteration.
#[derive(Debug, Clone)]
pub struct ReflectionState {
    pub k: usize,
    pub r_k: f64,
    pub s_k: f64,
    /// Parametrizes the far boundary curve `Γ′_k = φ_k((0, ε))`.
    pub phi_k: Germ,
    pub phi_k_inv: Germ,
    /// `Re f_k = Re h_k` on `Γ′_k`.
    pub h_k: PuiseuxSeries,
}

/// Fixed corner data plus the list of states `k = 1, …, k_max`.
#[derive(Debug, Clone)]
pub struct ReflectionSystem {
    pub psi: Germ,
    pub psi_inv: Germ,
    /// Boundary series on `Γ = ψ((0, ε))`.
    pub h0: PuiseuxSeries,
    /// `arg a(ψ)`.
    pub alpha: f64,
    pub theta: Angle,
    pub order: usize,
    states: Vec<ReflectionState>,
}

pub enum Membership {
    /// Smallest `k` with `z ∈ D_k`.
    Level(usize),
    Outside,
}

impl ReflectionSystem {
    /// The `k = 1` state: `φ₁ = χ`, `h₀ = g₀ ∘ ψ⁻¹`, `h₁ = g₁ ∘ χ⁻¹`.
    pub fn init(corner: &CornerSpec, order: usize) -> Result<Self> {
        let (psi, chi) = (&corner.psi, &corner.chi);
        if psi.k() != 1 || chi.k() != 1 {
            return Err(Error::NotNormalized(format!("need k(psi) = k(chi) = 1, got {} and {}", psi.k(), chi.k())));
        }
        for (name, g) in [("psi", psi), ("chi", chi)] {
            if (g.a().r() - 1.0).abs() > 1e-10 {
                return Err(Error::NotNormalized(format!("|a({name})| = {} is not 1", g.a().r())));
            }
        }
        let alpha = psi.a().phi();
        let opening = chi.a().phi() - alpha;
        if !(opening > 0.0) {
            return Err(Error::NotNormalized("need arg a(psi) < arg a(chi)".into()));
        }
        if (opening - corner.theta.value()).abs() > 1e-9 {
            return Err(Error::NotNormalized(format!(
                "arg a(chi) - arg a(psi) = {opening} differs from the angle {}",
                corner.theta.value()
            )));
        }
        let psi_inv = psi.invert_to(order)?;
        let chi_inv = chi.invert_to(order)?;
        let r1 = psi.radius().min(chi.radius()).min(psi_inv.radius()).min(chi_inv.radius());
        let psi = psi.with_radius(r1)?;
        let psi_inv = psi_inv.with_radius(r1)?;
        let chi = chi.with_radius(r1)?;
        let chi_inv = chi_inv.with_radius(r1)?;

        let h0 = compose(&corner.g0, &psi_inv, order)?;
        let h1 = compose(&corner.g1, &chi_inv, order)?;
        let d = h0.denominator().lcm(&h1.denominator());
        let s1 = corner.eps.min(h0.radius()).min(h1.radius()).min(r1);
        let h0 = h0.rescaled(d)?.with_radius(s1)?;
        let h1 = h1.rescaled(d)?.with_radius(s1)?;
        let first = ReflectionState { k: 1, r_k: r1, s_k: s1, phi_k: chi, phi_k_inv: chi_inv, h_k: h1 };
        Ok(Self { psi, psi_inv, h0, alpha, theta: corner.theta, order, states: vec![first] })
    }

    /// `init` followed by `steps` applications of [`ReflectionSystem::advance`].
    pub fn run(corner: &CornerSpec, steps: usize, order: usize) -> Result<Self> {
        let mut sys = Self::init(corner, order)?;
        for _ in 0..steps {
            sys.advance()?;
        }
        Ok(sys)
    }

    pub fn states(&self) -> &[ReflectionState] {
        &self.states
    }

    pub fn last(&self) -> &ReflectionState {
        self.states.last().expect("a system always has its first state")
    }

    pub fn k_max(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, k: usize) -> &ReflectionState {
        &self.states[k - 1]
    }

    pub fn s1(&self) -> f64 {
        self.states[0].s_k
    }

    /// Computes the next state from the last one and appends it.
    pub fn advance(&mut self) -> Result<&ReflectionState> {
        let next = self.step(self.last())?;
        self.states.push(next);
        Ok(self.last())
    }

    /// `φ_{k+1} = φ_k ∘ τ ∘ φ_k⁻¹ ∘ ψ ∘ τ`,
    /// `h_{k+1} = −conj((h₀ − h_k) ∘ φ_k ∘ τ ∘ φ_k⁻¹) + h_k`,
    /// `r_{k+1} = r_k/100`, `s_{k+1} = s_k/100`.
    pub fn step(&self, st: &ReflectionState) -> Result<ReflectionState> {
        let r_next = st.r_k / 100.0;
        let s_next = st.s_k / 100.0;
        let n = self.order;
        let phi_next = st.phi_k.compose_to(&st.phi_k_inv.compose_to(&self.psi, n)?.tau_conj(), n)?;
        let phi_next_inv = self.psi_inv.compose_to(&st.phi_k, n)?.tau_conj().compose_to(&st.phi_k_inv, n)?;

        let diff = self.h0.sub(&st.h_k)?;
        let reflected = compose(&compose(&diff, &st.phi_k, self.order)?.conj_tau(), &st.phi_k_inv, self.order)?;
        let h_next = reflected.scale(num_complex::Complex64::new(-1.0, 0.0)).add(&st.h_k)?;
        let h_next = h_next.with_radius(h_next.radius().min(st.s_k / 4.0))?;
        if h_next.denominator() != st.h_k.denominator() {
            return Err(Error::InvalidInput("denominator changed during a step".into()));
        }
        Ok(ReflectionState {
            k: st.k + 1,
            r_k: r_next,
            s_k: s_next,
            phi_k: phi_next.with_radius(r_next)?,
            phi_k_inv: phi_next_inv.with_radius(r_next)?,
            h_k: h_next,
        })
    }

    /// `σ_k = φ_k ∘ τ ∘ φ_k⁻¹`, the reflection across `Γ′_k`.
    pub fn sigma(&self, k: usize, z: LPoint) -> Result<LPoint> {
        let st = self.state(k);
        st.phi_k.apply(tau(st.phi_k_inv.apply(z)?))
    }

    fn above_gamma(&self, z: LPoint) -> bool {
        let delta = z.phi();
        if delta > self.alpha + FRAC_PI_2 {
            return true;
        }
        if delta < self.alpha - FRAC_PI_2 {
            return false;
        }
        matches!(self.psi_inv.apply(z), Ok(w) if w.phi() > -ON_CURVE)
    }

    fn below(&self, k: usize, z: LPoint) -> bool {
        let st = self.state(k);
        let c = st.phi_k.a().phi();
        let delta = z.phi();
        if delta < c - FRAC_PI_2 {
            return true;
        }
        if delta > c + FRAC_PI_2 {
            return false;
        }
        matches!(st.phi_k_inv.apply(z), Ok(w) if w.phi() < ON_CURVE)
    }

    /// Smallest `k ≤ k_max` with `z ∈ D_k ∩ B(s_k)`.
    ///
    /// `z` must lie above `Γ`; its level is the first `k` for which it lies
    /// below `Γ′_k`. Curves are located through angular windows of
    /// half-width `π/2` around `arg a`, falling back to the sign of the
    /// argument after pulling back by the boundary germ.
    pub fn membership(&self, z: LPoint) -> Membership {
        if !self.above_gamma(z) {
            return Membership::Outside;
        }
        for k in 1..=self.k_max() {
            if self.below(k, z) {
                return if z.r() < self.state(k).s_k { Membership::Level(k) } else { Membership::Outside };
            }
        }
        Membership::Outside
    }
}

fn compose(g: &PuiseuxSeries, phi: &Germ, order: usize) -> Result<PuiseuxSeries> {
    g.compose_germ(phi, order.max(g.coeffs().len() - 1))
}
