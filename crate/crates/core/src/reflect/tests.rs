use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::corner::{Angle, CornerSpec, HarmonicEvaluator};
use crate::error::Result;
use crate::germs::Germ;
use crate::lsurf::LPoint;
use crate::series::{PowerSeries, PuiseuxSeries};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn straight(theta: Angle, g0: PuiseuxSeries, g1: PuiseuxSeries) -> CornerSpec {
    let psi = Germ::rotation(0.0, 1.0).unwrap();
    let chi = Germ::rotation(theta.value(), 1.0).unwrap();
    CornerSpec::new(psi, chi, theta, g0, g1, 0.5).unwrap()
}

fn curved(theta: Angle, g0: PuiseuxSeries, g1: PuiseuxSeries) -> CornerSpec {
    let psi = Germ::new(
        LPoint::new(1.0, 0.0).unwrap(),
        1,
        PowerSeries::new(vec![c(0.0, 0.0), c(0.1, 0.05), c(0.0, -0.02)], 1.0).unwrap(),
        1.0,
    )
    .unwrap();
    let chi = Germ::new(
        LPoint::rotation(theta.value()).unwrap(),
        1,
        PowerSeries::new(vec![c(0.0, 0.0), c(-0.05, 0.1)], 1.0).unwrap(),
        1.0,
    )
    .unwrap();
    CornerSpec::new(psi, chi, theta, g0, g1, 0.5).unwrap()
}

/// `f = h₀`: real on `Γ`, so it is a valid base for any `g1`.
struct SeriesBase(PuiseuxSeries);

impl HarmonicEvaluator for SeriesBase {
    fn f(&self, z: LPoint) -> Result<Complex64> {
        Ok(self.0.eval_unchecked(z))
    }
}

#[test]
fn zero_data_stays_zero() {
    let zero = PuiseuxSeries::zero(1.0).unwrap();
    let sys = ReflectionSystem::run(&curved(Angle::irrational(1.0).unwrap(), zero.clone(), zero), 3, 16).unwrap();
    for st in sys.states() {
        assert!(st.h_k.is_zero());
    }
}

#[test]
fn straight_rays_double_the_angle() {
    let theta = 0.7;
    let zero = PuiseuxSeries::zero(1.0).unwrap();
    let sys = ReflectionSystem::run(&straight(Angle::irrational(theta).unwrap(), zero.clone(), zero), 4, 16).unwrap();
    for st in sys.states() {
        let want = 2f64.powi(st.k as i32 - 1) * theta;
        assert!((st.phi_k.a().phi() - want).abs() < 1e-12, "k = {}", st.k);
        assert!((st.phi_k.a().r() - 1.0).abs() < 1e-12);
        assert!(st.phi_k.h().coeffs().iter().all(|x| x.norm() < 1e-12));
    }
    let radii: Vec<f64> = sys.states().iter().map(|s| s.s_k).collect();
    for w in radii.windows(2) {
        assert!((w[1] - w[0] / 100.0).abs() < 1e-15 * w[0]);
    }
}

#[test]
fn denominator_is_stable() {
    let g0 = PuiseuxSeries::from_terms(&[(1, 2, c(1.0, 0.0))], 1.0).unwrap();
    let g1 = PuiseuxSeries::from_terms(&[(1, 3, c(-0.5, 0.0))], 1.0).unwrap();
    let sys = ReflectionSystem::run(&curved(Angle::irrational(1.0).unwrap(), g0, g1), 3, 16).unwrap();
    for st in sys.states() {
        assert_eq!(st.h_k.denominator(), 6);
    }
}

#[test]
fn membership_matches_exact_sectors() {
    let theta = 0.9;
    let zero = PuiseuxSeries::zero(1.0).unwrap();
    let sys = ReflectionSystem::run(&straight(Angle::irrational(theta).unwrap(), zero.clone(), zero), 4, 8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..2000 {
        let phi = rng.random_range(-1.0..10.0);
        let r = 10f64.powf(rng.random_range(-9.0..0.0));
        let z = LPoint::new(r, phi).unwrap();
        let want = if phi <= 0.0 {
            None
        } else {
            (1..=sys.k_max()).find(|&k| phi < 2f64.powi(k as i32 - 1) * theta).filter(|&k| r < sys.state(k).s_k)
        };
        let boundary = (0..6).any(|k| (phi - 2f64.powi(k) * theta).abs() < 1e-9) || phi.abs() < 1e-9;
        if boundary {
            continue;
        }
        let got = match sys.membership(z) {
            Membership::Level(k) => Some(k),
            Membership::Outside => None,
        };
        assert_eq!(got, want, "r = {r}, phi = {phi}");
    }
}

#[test]
fn straight_wedge_extension_is_the_expansion() {
    use crate::corner::{wedge_solve, EdgeTerm, WedgeProblem};
    use crate::logpower::Exponent;
    let theta = Angle::irrational(1.0).unwrap();
    let problem = WedgeProblem {
        theta,
        edge0: vec![EdgeTerm::new(Exponent::rational(1, 1).unwrap(), 1.0), EdgeTerm::new(Exponent::rational(3, 2).unwrap(), 1.0)],
        edge1: vec![EdgeTerm::new(Exponent::rational(2, 1).unwrap(), 1.0)],
    };
    let sol = wedge_solve(&problem).unwrap();
    let g0 = PuiseuxSeries::from_terms(&[(1, 1, c(1.0, 0.0)), (3, 2, c(1.0, 0.0))], 1.0).unwrap();
    let g1 = PuiseuxSeries::from_terms(&[(2, 1, c(1.0, 0.0))], 1.0).unwrap();
    let corner = straight(theta, g0, g1);
    let ext = Extension::build(&corner, sol.clone(), 4, 16, true).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    for _ in 0..500 {
        let phi = rng.random_range(-7.0..7.5);
        let r = 10f64.powf(rng.random_range(-7.0..-0.5));
        let z = LPoint::new(r, phi).unwrap();
        let Ok(got) = ext.f(z) else { continue };
        let want = sol.f(z).unwrap();
        assert!((got - want).norm() <= 1e-10 * (1.0 + want.norm()), "z = {z:?}: {got} vs {want}");
        checked += 1;
    }
    assert!(checked > 100, "only {checked} points inside");
    assert!(ext.level(LPoint::new(1e-6, -0.5).unwrap()).unwrap() < 0);
}

#[test]
fn boundary_condition_on_far_curves() {
    let g0 = PuiseuxSeries::from_terms(&[(1, 1, c(1.0, 0.0)), (5, 2, c(-0.3, 0.0))], 1.0).unwrap();
    let g1 = PuiseuxSeries::from_terms(&[(2, 1, c(0.7, 0.0))], 1.0).unwrap();
    let corner = curved(Angle::irrational(1.1).unwrap(), g0, g1);
    let sys = ReflectionSystem::run(&corner, 3, 24).unwrap();
    let base = SeriesBase(sys.h0.clone());
    for k in 2..=sys.k_max() {
        let st = sys.state(k);
        for j in 1..=5 {
            let t = st.s_k * 0.15 * j as f64;
            let z = st.phi_k.apply(LPoint::new(t, 0.0).unwrap()).unwrap();
            let f = extend_eval(&sys, &base, z).unwrap();
            let h = st.h_k.eval(z).unwrap();
            let scale = 1.0 + f.norm();
            assert!((f.re - h.re).abs() < 1e-9 * scale, "k = {k}, t = {t}: {} vs {}", f.re, h.re);
        }
    }
}

#[test]
fn continuation_below_gamma_is_schwarz() {
    // Re f = 0 on the real axis, so f continues to itself across it
    struct Odd;
    impl HarmonicEvaluator for Odd {
        fn f(&self, z: LPoint) -> Result<Complex64> {
            Ok(c(0.0, 1.0) * (crate::lsurf::cpow(1.0, z) + crate::lsurf::cpow(3.0, z)))
        }
    }
    let theta = Angle::rational_pi(1, 3).unwrap();
    let zero = PuiseuxSeries::zero(1.0).unwrap();
    let g1 = PuiseuxSeries::from_terms(&[(1, 1, c(1.0, 0.0))], 1.0).unwrap();
    let ext = Extension::build(&straight(theta, zero, g1), Odd, 2, 8, true).unwrap();
    for (r, phi) in [(1e-3, -0.2), (2e-3, -0.9), (1e-5, -0.5), (1e-6, -1.0)] {
        let z = LPoint::new(r, phi).unwrap();
        assert_eq!(ext.level(z), Some(-2));
        let got = ext.f(z).unwrap();
        let want = Odd.f(z).unwrap();
        assert!((got - want).norm() < 1e-12 * want.norm().max(1e-300) + 1e-18, "{got} vs {want}");
    }
}

#[test]
fn envelope_contains_quadratic_domain_and_sits_in_windows() {
    for (theta, s) in [(0.3, 0.5), (1.0, 1e-3), (2.5, 0.2), (PI, 1.0)] {
        let env = envelope_from(0.0, theta, s).unwrap();
        let (cover, quad) = env.check(1.0, 1e4, 20_000);
        assert_eq!((cover, quad), (0, 0), "theta = {theta}, s = {s}");
        assert!((env.q.c - 1.0 / env.big_k).abs() < 1e-15);
    }
    assert!(envelope_from(0.0, 0.0, 1.0).is_err());
}

#[test]
fn certificate_accepts_true_expansion() {
    use crate::corner::{wedge_solve, EdgeTerm, WedgeProblem};
    use crate::logpower::Exponent;
    let theta = Angle::irrational(1.0).unwrap();
    let problem = WedgeProblem {
        theta,
        edge0: vec![EdgeTerm::new(Exponent::rational(2, 1).unwrap(), 1.0)],
        edge1: vec![EdgeTerm::new(Exponent::rational(1, 1).unwrap(), -1.0)],
    };
    let sol = wedge_solve(&problem).unwrap();
    let g0 = PuiseuxSeries::from_terms(&[(2, 1, c(1.0, 0.0))], 1.0).unwrap();
    let g1 = PuiseuxSeries::from_terms(&[(1, 1, c(-1.0, 0.0))], 1.0).unwrap();
    let corner = straight(theta, g0, g1);
    let sys = ReflectionSystem::run(&corner, 3, 8).unwrap();
    let exp = sol.expansion().clone();
    let cert = certify_expansion(&sys, &sol, &exp, &exp, 2.5, CertifyConfig { samples_per_level: 200, seed: 1 }).unwrap();
    assert!(cert.passed(), "{cert:?}");
}

