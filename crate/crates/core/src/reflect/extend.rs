use num_complex::Complex64;

use super::state::{Membership, ReflectionSystem};
use crate::corner::{CornerSpec, HarmonicEvaluator};
use crate::error::{Error, Result};
use crate::lsurf::{tau, LPoint};

fn outside(z: LPoint) -> Error {
    Error::OutsideExtension { r: z.r(), phi: z.phi() }
}

/// Evaluates the continued function at `z` by walking down the reflection
/// levels with `w = σ_{k−1}(z)` and unwinding
/// `f_k(z) = −conj(f_{k−1}(w) − h_{k−1}(w)) + h_{k−1}(z)`.
pub fn extend_eval(sys: &ReflectionSystem, base: &dyn HarmonicEvaluator, z: LPoint) -> Result<Complex64> {
    let mut level = match sys.membership(z) {
        Membership::Level(k) => k,
        Membership::Outside => return Err(outside(z)),
    };
    let mut chain: Vec<(LPoint, LPoint, usize)> = Vec::with_capacity(level);
    let mut cur = z;
    while level > 1 {
        let k = level - 1;
        let w = sys.sigma(k, cur)?;
        // on Γ′_k itself rounding may put w on either side; both values agree there
        let next = match sys.membership(w) {
            Membership::Level(j) => j.min(k),
            Membership::Outside => return Err(outside(w)),
        };
        chain.push((cur, w, k));
        cur = w;
        level = next;
    }
    let mut val = base.f(cur)?;
    for &(zj, wj, k) in chain.iter().rev() {
        let h = &sys.state(k).h_k;
        val = -(val - h.eval(wj)?).conj() + h.eval(zj)?;
    }
    Ok(val)
}

/// `z ↦ conj(f(τ z))`, the base function of the mirrored corner.
struct Mirrored<'a>(&'a dyn HarmonicEvaluator);

impl HarmonicEvaluator for Mirrored<'_> {
    fn f(&self, z: LPoint) -> Result<Complex64> {
        Ok(self.0.f(tau(z))?.conj())
    }
}

/// The corner seen through `τ`: the two boundary curves swap roles, so
/// iterating it extends the original function below `Γ`.
pub fn mirrored_corner(corner: &CornerSpec) -> CornerSpec {
    CornerSpec {
        psi: corner.chi.tau_conj(),
        chi: corner.psi.tau_conj(),
        theta: corner.theta,
        g0: corner.g1.clone(),
        g1: corner.g0.clone(),
        eps: corner.eps,
    }
}

/// The continued function on both sides of the corner.
pub struct Extension<B> {
    pub positive: ReflectionSystem,
    pub negative: Option<ReflectionSystem>,
    pub base: B,
}

impl<B: HarmonicEvaluator> Extension<B> {
    /// Runs `steps` reflections in the positive direction and, if
    /// `both_directions`, on the mirrored corner as well.
    pub fn build(corner: &CornerSpec, base: B, steps: usize, order: usize, both_directions: bool) -> Result<Self> {
        let positive = ReflectionSystem::run(corner, steps, order)?;
        let negative = if both_directions {
            Some(ReflectionSystem::run(&mirrored_corner(corner), steps, order)?)
        } else {
            None
        };
        Ok(Self { positive, negative, base })
    }

    /// Level of `z`: positive for the forward iteration, negative for the
    /// mirrored one, `None` outside.
    pub fn level(&self, z: LPoint) -> Option<i64> {
        if let Membership::Level(k) = self.positive.membership(z) {
            return Some(k as i64);
        }
        if let Some(neg) = &self.negative {
            if let Membership::Level(k) = neg.membership(tau(z)) {
                return Some(-(k as i64));
            }
        }
        None
    }
}

impl<B: HarmonicEvaluator> HarmonicEvaluator for Extension<B> {
    fn f(&self, z: LPoint) -> Result<Complex64> {
        if let Membership::Level(_) = self.positive.membership(z) {
            return extend_eval(&self.positive, &self.base, z);
        }
        if let Some(neg) = &self.negative {
            let zt = tau(z);
            if let Membership::Level(_) = neg.membership(zt) {
                return Ok(extend_eval(neg, &Mirrored(&self.base), zt)?.conj());
            }
        }
        Err(outside(z))
    }
}
