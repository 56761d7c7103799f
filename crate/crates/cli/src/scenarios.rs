//! One runner per scenario kind. Each returns the checks it performed;
//! domain errors abort the run and are reported with the stage they hit.

use std::f64::consts::PI;

use corner_core::corner::{
    fd_laplacian, green_function, is_resonant, poisson_disk, wedge_solve, Angle, CornerSpec, DiskSolver, EdgeTerm,
    HarmonicEvaluator, WedgeProblem, WedgeSolution,
};
use corner_core::reflect::{
    certify_expansion, envelope, envelope_from, CertifyConfig, Extension, ReflectionSystem,
};
use corner_core::{par, Complex64, Error, Germ, LPoint, LogPowerSeries, PuiseuxSeries};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::emit_grid;
use crate::report::{Outcome, Table};
use crate::schema::{
    edge_terms, CompareScenario, EdgeTermLit, EnvelopeScenario, Expect, GreenScenario, PoissonScenario,
    ReflectScenario, Scenario, WedgeScenario,
};

/// A domain error together with the stage that raised it.
#[derive(Debug)]
pub struct StageError {
    pub stage: &'static str,
    pub source: Error,
}

trait Stage<T> {
    fn at(self, stage: &'static str) -> Result<T, StageError>;
}

impl<T> Stage<T> for corner_core::Result<T> {
    fn at(self, stage: &'static str) -> Result<T, StageError> {
        self.map_err(|source| StageError { stage, source })
    }
}

pub struct Ctx {
    pub seed: u64,
    pub order: usize,
}

impl Ctx {
    /// The scenario's single named generator.
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn run(s: &Scenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    match s {
        Scenario::Wedge(w) => run_wedge(w, ctx),
        Scenario::Reflect(r) => run_reflect(r, ctx),
        Scenario::ExpansionCompare(c) => run_compare(c, ctx),
        Scenario::Poisson(p) => run_poisson(p, ctx),
        Scenario::Green(g) => run_green(g, ctx),
        Scenario::Envelope(e) => run_envelope(e, ctx),
    }
}

fn solve(theta: Angle, edge0: &[EdgeTermLit], edge1: &[EdgeTermLit]) -> Result<(WedgeProblem, WedgeSolution), StageError> {
    let p = WedgeProblem {
        theta,
        edge0: edge_terms(edge0).at("edge data")?,
        edge1: edge_terms(edge1).at("edge data")?,
    };
    let sol = wedge_solve(&p).at("wedge_solve")?;
    Ok((p, sol))
}

fn edge_value(terms: &[EdgeTerm], t: f64) -> f64 {
    terms.iter().map(|e| e.coeff * t.powf(e.beta.value())).sum()
}

/// `Σ c·t^β` as a Puiseux series; every `β` must be an exact rational.
fn edge_series(terms: &[EdgeTerm]) -> corner_core::Result<PuiseuxSeries> {
    let mut fr = Vec::with_capacity(terms.len());
    let mut d = 1i64;
    for t in terms {
        let q = t.beta.exact().ok_or_else(|| {
            Error::InvalidInput(format!("reflection data needs rational exponents, got {}", t.beta.value()))
        })?;
        if *q.numer() < 0 {
            return Err(Error::InvalidInput("boundary exponents must be non-negative".into()));
        }
        d = d.lcm(q.denom());
        fr.push((*q.numer(), *q.denom(), t.coeff));
    }
    let lit: Vec<(u32, u32, Complex64)> =
        fr.iter().map(|&(n, den, c)| ((n * (d / den)) as u32, d as u32, Complex64::new(c, 0.0))).collect();
    PuiseuxSeries::from_terms(&lit, 1.0)
}

/// Straight rays at `alpha` and `alpha + θ`.
fn straight_corner(theta: Angle, alpha: f64, p: &WedgeProblem, eps: f64) -> corner_core::Result<CornerSpec> {
    let psi = Germ::rotation(alpha, 1.0)?;
    let chi = Germ::rotation(alpha + theta.value(), 1.0)?;
    CornerSpec::new(psi, chi, theta, edge_series(&p.edge0)?, edge_series(&p.edge1)?, eps)
}

fn run_wedge(s: &WedgeScenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    let c = s.common();
    let theta = s.theta.to_angle().at("theta")?;
    let (p, sol) = solve(theta, &s.edge0, &s.edge1)?;
    let th = theta.value();
    let mut out = Outcome::default();

    // finite-difference Laplacian, relative to the size of second derivatives
    let mut rng = ctx.rng();
    let pts: Vec<LPoint> = (0..s.laplacian_points)
        .map(|_| LPoint::new(rng.random_range(0.2..0.9), th * rng.random_range(0.1..0.9)))
        .collect::<corner_core::Result<_>>()
        .at("sampling")?;
    let all: Vec<&EdgeTerm> = p.edge0.iter().chain(&p.edge1).collect();
    let rel = par::try_map(&pts, |z| -> corner_core::Result<f64> {
        let (lap, _) = fd_laplacian(&sol, *z, s.fd_step)?;
        let r = z.r();
        let scale: f64 = all.iter().map(|e| e.coeff.abs() * r.powf(e.beta.value())).sum::<f64>()
            * (1.0 + r.ln().abs())
            / (r * r);
        Ok(if scale > 0.0 { lap.abs() / scale } else { lap.abs() })
    })
    .at("laplacian")?;
    out.bound("harmonic_fd_laplacian", rel.iter().copied().fold(0.0, f64::max), c.tol("harmonic_fd_laplacian", 1e-4));

    // boundary data, through both the trigonometric form and Re f
    for (name, phi, terms) in [("boundary_edge0", 0.0, &p.edge0), ("boundary_edge1", th, &p.edge1)] {
        let mut worst = 0.0f64;
        for i in 0..50 {
            let t = 10f64.powf(-3.0 + 3.0 * i as f64 / 49.0);
            let z = LPoint::new(t, phi).at("sampling")?;
            let want = edge_value(terms, t);
            let u = sol.u(z).at(name)?;
            let re_f = sol.f(z).at(name)?.re;
            worst = worst.max((u - want).abs().max((re_f - want).abs()) / (1.0 + want.abs()));
        }
        out.bound(name, worst, c.tol(name, 1e-10));
    }

    let mut resonant = false;
    for e in &all {
        resonant |= e.coeff != 0.0 && is_resonant(&theta, &e.beta).at("resonance")?;
    }
    out.check(
        "log_term_iff_resonant",
        sol.is_log_free() != resonant,
        format!("resonant data: {resonant}, log-free expansion: {}", sol.is_log_free()),
    );
    out.tables.push(emit_grid(&sol, &s.grid).at("grid")?);
    Ok(out)
}

/// Worst relative deviation `|got − want| / |want|`; exact zeros compare exactly.
fn rel_dev(got: Complex64, want: Complex64) -> f64 {
    let d = (got - want).norm();
    if d == 0.0 {
        0.0
    } else {
        d / want.norm()
    }
}

fn iteration_invariants(out: &mut Outcome, sys: &ReflectionSystem, label: &str) {
    let s1 = sys.s1();
    let r1 = sys.state(1).r_k;
    let theta = sys.theta.value();
    let (mut drift, mut angle, mut modulus) = (0.0f64, 0.0f64, 0.0f64);
    let mut denominators = true;
    let d = sys.state(1).h_k.denominator();
    for st in sys.states() {
        let scale = 100f64.powi(1 - st.k as i32);
        drift = drift.max((st.s_k / (s1 * scale) - 1.0).abs()).max((st.r_k / (r1 * scale) - 1.0).abs());
        let want = 2f64.powi(st.k as i32 - 1) * theta;
        angle = angle.max((st.phi_k.a().phi() - sys.alpha - want).abs());
        modulus = modulus.max((st.phi_k.a().r() - 1.0).abs());
        denominators &= st.h_k.denominator() == d;
    }
    out.bound(&format!("radius_recursion{label}"), drift, 1e-12);
    out.bound(&format!("angle_doubling{label}"), angle, 1e-10);
    out.bound(&format!("unit_modulus{label}"), modulus, 1e-10);
    out.check(&format!("denominator_stable{label}"), denominators, format!("d = {d} at all {} levels", sys.k_max()));
}

fn run_reflect(s: &ReflectScenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    let c = s.common();
    let theta = s.theta.to_angle().at("theta")?;
    let (p, sol) = solve(theta, &s.edge0, &s.edge1)?;
    let corner = straight_corner(theta, s.alpha, &p, s.eps).at("corner")?;
    let base = sol.rotated(s.alpha);
    let ext = Extension::build(&corner, base, s.steps, ctx.order, s.both_directions).at("reflection")?;
    let mut out = Outcome::default();
    let th = theta.value();
    let sys = &ext.positive;
    let k_max = sys.k_max();

    iteration_invariants(&mut out, sys, "");
    if let Some(neg) = &ext.negative {
        iteration_invariants(&mut out, neg, "_negative");
    }

    // the extension against the closed form, at points of every level
    let mut rng = ctx.rng();
    let span = 2f64.powi(k_max as i32 - 1) * th;
    let s_last = sys.last().s_k;
    let sides: &[f64] = if s.both_directions { &[1.0, -1.0] } else { &[1.0] };
    let mut pts = Vec::with_capacity(s.samples * sides.len());
    for &side in sides {
        for _ in 0..s.samples {
            // the mirrored iteration grows downward from the far edge
            let start = if side > 0.0 { s.alpha } else { s.alpha + th };
            let phi = start + side * span * rng.random_range(0.001..0.999);
            let r = 0.5 * s_last * 10f64.powf(-3.0 * rng.random::<f64>());
            pts.push(LPoint::new(r, phi).at("sampling")?);
        }
    }
    let devs = par::try_map(&pts, |z| -> corner_core::Result<f64> { Ok(rel_dev(ext.f(*z)?, base.f(*z)?)) })
        .at("extend_eval")?;
    let tol = c.tol("oracle_equivalence", 1e-8);
    out.bound("oracle_equivalence", devs.iter().copied().fold(0.0, f64::max), tol);

    // Re f_k = Re h_k on the far curves
    let mut worst = 0.0f64;
    for k in 2..=k_max {
        let st = sys.state(k);
        for j in 1..=10 {
            let t = st.s_k * 0.45 * j as f64 / 10.0;
            let z = st.phi_k.apply(LPoint::new(t, 0.0).at("sampling")?).at("boundary curve")?;
            let f = ext.f(z).at("extend_eval")?;
            let h = st.h_k.eval(z).at("boundary series")?;
            worst = worst.max((f.re - h.re).abs() / h.norm().max(1.0));
        }
    }
    if k_max >= 2 {
        out.bound("re_boundary_far_curves", worst, c.tol("re_boundary_far_curves", 1e-8));
    }

    // with zero data on Γ the first negative step is the classical reflection
    if let Some(neg) = &ext.negative {
        if p.edge0.iter().all(|e| e.coeff == 0.0) && neg.k_max() >= 2 {
            let s2 = neg.state(2).s_k;
            let mut worst = 0.0f64;
            for _ in 0..s.samples {
                let phi = s.alpha - th * rng.random_range(0.01..0.99);
                let r = 0.5 * s2 * 10f64.powf(-3.0 * rng.random::<f64>());
                let z = LPoint::new(r, phi).at("sampling")?;
                let mirror = LPoint::new(r, 2.0 * s.alpha - phi).at("sampling")?;
                let want = -base.f(mirror).at("base")?.conj();
                worst = worst.max(rel_dev(ext.f(z).at("extend_eval")?, want));
            }
            out.bound("schwarz_reflection", worst, c.tol("schwarz_reflection", 1e-10));
        }
    }

    if let Angle::Irrational { .. } = theta {
        out.check("is_log_free", sol.is_log_free(), "irrational angle, rational data");
    }

    if k_max >= 3 {
        let env = envelope(sys).at("envelope")?;
        let (cover, quad) = env.check(1.0, 1e4, 10_000);
        out.check("windows_cover_envelope", cover == 0, format!("{cover} violations on [1, 1e4]"));
        out.check("quadratic_domain_in_envelope", quad == 0, format!("{quad} violations on [1, 1e4]"));
        out.constant("K", env.big_k);
        out.constant("c", env.q.c);
        out.constant("C", env.q.big_c);
    }
    out.constant("s1", sys.s1());
    out.constant("s_last", s_last);

    if let Some(r) = s.r_cutoff {
        let exp = sol.expansion();
        let gamma = exp.truncate(r);
        let cfg = CertifyConfig { samples_per_level: s.samples, seed: ctx.seed };
        let cert = certify_expansion(sys, &ext, exp, &gamma, r, cfg).at("certificate")?;
        out.check(
            "expansion_certificate",
            cert.passed(),
            format!("A = {:.4}, window violations {}", cert.a, cert.window_violations),
        );
        out.constant("A", cert.a);
        out.constant("R_prime", cert.r_prime);
        out.constant("S", cert.s);
    }

    if let Some(g) = &s.grid {
        let mut t = emit_grid(&ext, g).at("grid")?;
        t.name = "extension".into();
        out.tables.push(t);
    }
    Ok(out)
}

fn run_compare(s: &CompareScenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    let theta = s.theta.to_angle().at("theta")?;
    let (p, sol) = solve(theta, &s.edge0, &s.edge1)?;
    let corner = straight_corner(theta, 0.0, &p, s.eps).at("corner")?;
    let sys = ReflectionSystem::run(&corner, s.steps, ctx.order).at("reflection")?;
    let ext = Extension { positive: sys, negative: None, base: sol.clone() };
    let exp: &LogPowerSeries = sol.expansion();
    let mut gamma = exp.truncate(s.r_cutoff);
    if s.drop_log_terms {
        gamma = gamma.without_logs();
    }
    let cfg = CertifyConfig { samples_per_level: s.samples_per_level, seed: ctx.seed };
    let mut out = Outcome::default();
    let (certified, detail) = match certify_expansion(&ext.positive, &ext, exp, &gamma, s.r_cutoff, cfg) {
        Ok(cert) => {
            let mut t = Table::new("certificate", &["k", "c_k", "a_pow_k", "t_k", "window_ratio"]);
            for k in 0..cert.c_k.len() {
                t.push_numbers(&[(k + 1) as f64, cert.c_k[k], cert.a.powi(k as i32 + 1), cert.t_k[k], cert.window_ratio[k]]);
            }
            out.tables.push(t);
            out.constant("A", cert.a);
            out.constant("R_prime", cert.r_prime);
            out.constant("S", cert.s);
            let detail = format!(
                "cascade C_k <= A^k: {}, window violations: {}",
                cert.cascade_holds(),
                cert.window_violations
            );
            (cert.passed(), detail)
        }
        Err(Error::WindowEmpty { k }) => (false, format!("window t_{k} underflows")),
        Err(e) => return Err(StageError { stage: "certificate", source: e }),
    };
    let want = s.expect == Expect::Pass;
    out.check(
        "certificate_matches_expectation",
        certified == want,
        format!("certified: {certified} (expected {}); {detail}", if want { "pass" } else { "fail" }),
    );
    out.check("gamma_is_log_free", gamma.is_log_free() || !s.drop_log_terms, "log terms removed on request");
    Ok(out)
}

fn disk_points(rng: &mut ChaCha8Rng, n: usize, max_modulus: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(max_modulus * rng.random::<f64>().sqrt(), rng.random_range(-PI..PI)))
        .collect()
}

fn run_poisson(s: &PoissonScenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    let c = s.common();
    let mut rng = ctx.rng();
    let pts = disk_points(&mut rng, s.samples, s.max_modulus);
    let poly = |z: Complex64| -> f64 {
        s.boundary.iter().map(|t| (Complex64::new(t.re, t.im) * z.powu(t.n)).re).sum()
    };
    let rows = par::try_map(&pts, |xi| -> corner_core::Result<[f64; 6]> {
        Ok([
            xi.re,
            xi.im,
            poisson_disk(&|_| 1.0, *xi, s.nodes)?,
            poisson_disk(&|e| e.re, *xi, s.nodes)?,
            poisson_disk(&poly, *xi, s.nodes)?,
            poly(*xi),
        ])
    })
    .at("poisson_disk")?;
    let mut out = Outcome::default();
    let worst = |f: &dyn Fn(&[f64; 6]) -> f64| rows.iter().map(f).fold(0.0, f64::max);
    out.bound("mean_value", worst(&|r| (r[2] - 1.0).abs()), c.tol("mean_value", 1e-10));
    out.bound("re_eta_extension", worst(&|r| (r[3] - r[0]).abs()), c.tol("re_eta_extension", 1e-6));
    if !s.boundary.is_empty() {
        out.bound("harmonic_polynomial", worst(&|r| (r[4] - r[5]).abs()), c.tol("harmonic_polynomial", 1e-6));
    }
    let mut t = Table::new("poisson", &["xi_re", "xi_im", "one", "re_eta", "poly", "poly_exact"]);
    for r in &rows {
        t.push_numbers(r);
    }
    out.tables.push(t);
    Ok(out)
}

fn run_green(s: &GreenScenario, ctx: &Ctx) -> Result<Outcome, StageError> {
    let c = s.common();
    let mut rng = ctx.rng();
    let xs = disk_points(&mut rng, s.samples, s.max_modulus);
    let ys = disk_points(&mut rng, s.samples, s.max_modulus);
    let pairs: Vec<(Complex64, Complex64)> = xs.into_iter().zip(ys).collect();
    let solver = DiskSolver { nodes: s.nodes };
    let rows = par::try_map(&pairs, |&(x, y)| -> corner_core::Result<[f64; 7]> {
        let closed = ((Complex64::new(1.0, 0.0) - x * y.conj()).norm() / (x - y).norm()).ln();
        Ok([x.re, x.im, y.re, y.im, green_function(&solver, y, x)?, green_function(&solver, x, y)?, closed])
    })
    .at("green_function")?;
    let mut out = Outcome::default();
    let worst = |f: &dyn Fn(&[f64; 7]) -> f64| rows.iter().map(f).fold(0.0, f64::max);
    out.bound("green_closed_form", worst(&|r| (r[4] - r[6]).abs()), c.tol("green_closed_form", 1e-5));
    out.bound("green_symmetry", worst(&|r| (r[4] - r[5]).abs()), c.tol("green_symmetry", 1e-5));
    let mut t = Table::new("green", &["x_re", "x_im", "y_re", "y_im", "g_y_at_x", "g_x_at_y", "closed_form"]);
    for r in &rows {
        t.push_numbers(r);
    }
    out.tables.push(t);
    Ok(out)
}

fn run_envelope(s: &EnvelopeScenario, _ctx: &Ctx) -> Result<Outcome, StageError> {
    let theta = s.theta.to_angle().at("theta")?;
    let env = envelope_from(s.alpha, theta.value(), s.s).at("envelope")?;
    let (cover, quad) = env.check(s.phi_min, s.phi_max, s.samples);
    let mut out = Outcome::default();
    let range = format!("[{}, {}]", s.phi_min, s.phi_max);
    out.check("windows_cover_envelope", cover == 0, format!("{cover} violations on {range}"));
    out.check("quadratic_domain_in_envelope", quad == 0, format!("{quad} violations on {range}"));
    out.constant("K", env.big_k);
    out.constant("c", env.q.c);
    out.constant("C", env.q.big_c);
    let mut t = Table::new("envelope", &["x", "window_radius", "envelope_radius", "quadratic_radius"]);
    let lo = s.phi_min.max(1e-12);
    for i in 0..200 {
        let x = (lo.ln() + (s.phi_max.ln() - lo.ln()) * i as f64 / 199.0).exp();
        t.push_numbers(&[x, env.window_radius(x), env.envelope_radius(x), env.quadratic_radius(x)]);
    }
    out.tables.push(t);
    Ok(out)
}
