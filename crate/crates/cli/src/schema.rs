//! Scenario files: one JSON object tagged by `"scenario"`.

use std::collections::BTreeMap;

use corner_core::corner::{Angle, EdgeTerm};
use corner_core::Exponent;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "scenario", rename_all = "snake_case", deny_unknown_fields)]
pub enum Scenario {
    Wedge(WedgeScenario),
    Reflect(ReflectScenario),
    ExpansionCompare(CompareScenario),
    Poisson(PoissonScenario),
    Green(GreenScenario),
    Envelope(EnvelopeScenario),
}

impl Scenario {
    pub fn kind(&self) -> &'static str {
        match self {
            Scenario::Wedge(_) => "wedge",
            Scenario::Reflect(_) => "reflect",
            Scenario::ExpansionCompare(_) => "expansion_compare",
            Scenario::Poisson(_) => "poisson",
            Scenario::Green(_) => "green",
            Scenario::Envelope(_) => "envelope",
        }
    }

    pub fn common(&self) -> Common {
        match self {
            Scenario::Wedge(s) => s.common(),
            Scenario::Reflect(s) => s.common(),
            Scenario::ExpansionCompare(s) => s.common(),
            Scenario::Poisson(s) => s.common(),
            Scenario::Green(s) => s.common(),
            Scenario::Envelope(s) => s.common(),
        }
    }

    /// Semantic checks serde cannot express. Returns the offending field.
    pub fn validate(&self) -> Result<(), (String, String)> {
        let c = self.common();
        for (name, tol) in &c.precision.tolerances {
            if !(*tol > 0.0) || !tol.is_finite() {
                return Err((format!("precision.tolerances.{name}"), format!("must be positive, got {tol}")));
            }
        }
        if c.precision.trunc_order == Some(0) {
            return Err(("precision.trunc_order".into(), "must be at least 1".into()));
        }
        let grid = match self {
            Scenario::Wedge(s) => Some(&s.grid),
            Scenario::Reflect(s) => s.grid.as_ref(),
            _ => None,
        };
        if let Some(g) = grid {
            g.validate()?;
        }
        match self {
            Scenario::Reflect(s) if s.steps == 0 => Err(("steps".into(), "need at least one step".into())),
            Scenario::ExpansionCompare(s) if s.steps == 0 => Err(("steps".into(), "need at least one step".into())),
            Scenario::Poisson(s) if !(s.max_modulus > 0.0 && s.max_modulus < 1.0) => {
                Err(("max_modulus".into(), "must lie in (0, 1)".into()))
            }
            Scenario::Green(s) if !(s.max_modulus > 0.0 && s.max_modulus < 1.0) => {
                Err(("max_modulus".into(), "must lie in (0, 1)".into()))
            }
            Scenario::Envelope(s) if !(s.phi_min < s.phi_max) => {
                Err(("phi_max".into(), "must exceed phi_min".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Precision {
    #[serde(default)]
    pub trunc_order: Option<usize>,
    /// Overrides of the default tolerance of a named check.
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
}

/// Fields shared by every kind.
#[derive(Debug, Clone, Default)]
pub struct Common {
    pub name: Option<String>,
    pub seed: u64,
    pub precision: Precision,
}

impl Common {
    pub fn tol(&self, name: &str, default: f64) -> f64 {
        self.precision.tolerances.get(name).copied().unwrap_or(default)
    }
}

/// A scenario struct with the shared `name`, `seed` and `precision` fields.
macro_rules! scenario {
    ($(#[$m:meta])* pub struct $name:ident { $($body:tt)* }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            #[serde(default)]
            pub name: Option<String>,
            #[serde(default)]
            pub seed: u64,
            #[serde(default)]
            pub precision: Precision,
            $($body)*
        }

        impl $name {
            pub fn common(&self) -> Common {
                Common { name: self.name.clone(), seed: self.seed, precision: self.precision.clone() }
            }
        }
    };
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AngleLit {
    RationalPi { p: i64, q: i64 },
    Irrational { value: f64 },
}

impl AngleLit {
    pub fn to_angle(self) -> corner_core::Result<Angle> {
        match self {
            AngleLit::RationalPi { p, q } => Angle::rational_pi(p, q),
            AngleLit::Irrational { value } => Angle::irrational(value),
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum ExponentLit {
    Rational { num: i64, den: i64 },
    Real { real: f64 },
}

impl ExponentLit {
    pub fn to_exponent(self) -> corner_core::Result<Exponent> {
        match self {
            ExponentLit::Rational { num, den } => Exponent::rational(num, den),
            ExponentLit::Real { real } => Exponent::real(real),
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeTermLit {
    pub beta: ExponentLit,
    pub coeff: f64,
}

pub fn edge_terms(lits: &[EdgeTermLit]) -> corner_core::Result<Vec<EdgeTerm>> {
    lits.iter().map(|t| Ok(EdgeTerm::new(t.beta.to_exponent()?, t.coeff))).collect()
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
    #[serde(default)]
    pub log: bool,
}

impl Axis {
    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.min];
        }
        (0..self.n)
            .map(|i| {
                let s = i as f64 / (self.n - 1) as f64;
                if self.log {
                    (self.min.ln() + s * (self.max.ln() - self.min.ln())).exp()
                } else {
                    self.min + s * (self.max - self.min)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub r: Axis,
    pub phi: Axis,
}

impl GridSpec {
    fn validate(&self) -> Result<(), (String, String)> {
        let r = &self.r;
        if r.n == 0 || self.phi.n == 0 {
            return Err(("grid".into(), "axes need n >= 1".into()));
        }
        if !(r.min > 0.0) || r.max < r.min || !r.max.is_finite() {
            return Err(("grid.r".into(), "need 0 < min <= max".into()));
        }
        if self.phi.max < self.phi.min || !self.phi.min.is_finite() || !self.phi.max.is_finite() {
            return Err(("grid.phi".into(), "need finite min <= max".into()));
        }
        if self.phi.log {
            return Err(("grid.phi.log".into(), "the angle axis is linear".into()));
        }
        Ok(())
    }
}

scenario! {
    pub struct WedgeScenario {
        pub theta: AngleLit,
        #[serde(default)]
        pub edge0: Vec<EdgeTermLit>,
        #[serde(default)]
        pub edge1: Vec<EdgeTermLit>,
        pub grid: GridSpec,
        #[serde(default = "default_laplacian_points")]
        pub laplacian_points: usize,
        #[serde(default = "default_fd_step")]
        pub fd_step: f64,
    }
}

scenario! {
    pub struct ReflectScenario {
        pub theta: AngleLit,
        /// Direction of the first edge.
        #[serde(default)]
        pub alpha: f64,
        #[serde(default)]
        pub edge0: Vec<EdgeTermLit>,
        #[serde(default)]
        pub edge1: Vec<EdgeTermLit>,
        pub steps: usize,
        #[serde(default = "default_eps")]
        pub eps: f64,
        #[serde(default = "default_true")]
        pub both_directions: bool,
        #[serde(default = "default_samples")]
        pub samples: usize,
        /// Cutoff for the optional expansion certificate.
        #[serde(default, rename = "R")]
        pub r_cutoff: Option<f64>,
        #[serde(default)]
        pub grid: Option<GridSpec>,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Pass,
    Fail,
}

scenario! {
    pub struct CompareScenario {
        pub theta: AngleLit,
        #[serde(default)]
        pub edge0: Vec<EdgeTermLit>,
        #[serde(default)]
        pub edge1: Vec<EdgeTermLit>,
        pub steps: usize,
        #[serde(rename = "R")]
        pub r_cutoff: f64,
        #[serde(default = "default_eps")]
        pub eps: f64,
        #[serde(default = "default_level_samples")]
        pub samples_per_level: usize,
        #[serde(default)]
        pub drop_log_terms: bool,
        pub expect: Expect,
    }
}

/// `Re Σ c_n η^n` on the circle.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTermLit {
    pub n: u32,
    pub re: f64,
    pub im: f64,
}

scenario! {
    pub struct PoissonScenario {
        #[serde(default = "default_nodes")]
        pub nodes: usize,
        #[serde(default = "default_samples")]
        pub samples: usize,
        #[serde(default = "default_max_modulus")]
        pub max_modulus: f64,
        #[serde(default)]
        pub boundary: Vec<PolyTermLit>,
    }
}

scenario! {
    pub struct GreenScenario {
        #[serde(default = "default_nodes")]
        pub nodes: usize,
        #[serde(default = "default_samples")]
        pub samples: usize,
        #[serde(default = "default_max_modulus")]
        pub max_modulus: f64,
    }
}

scenario! {
    pub struct EnvelopeScenario {
        pub theta: AngleLit,
        #[serde(default)]
        pub alpha: f64,
        /// First window radius `s₁`.
        pub s: f64,
        #[serde(default = "default_phi_min")]
        pub phi_min: f64,
        #[serde(default = "default_phi_max")]
        pub phi_max: f64,
        #[serde(default = "default_envelope_samples")]
        pub samples: usize,
    }
}

fn default_laplacian_points() -> usize {
    1000
}
fn default_fd_step() -> f64 {
    1e-3
}
fn default_eps() -> f64 {
    0.5
}
fn default_true() -> bool {
    true
}
fn default_samples() -> usize {
    100
}
fn default_level_samples() -> usize {
    200
}
fn default_nodes() -> usize {
    1024
}
fn default_max_modulus() -> f64 {
    0.9
}
fn default_phi_min() -> f64 {
    1.0
}
fn default_phi_max() -> f64 {
    1e4
}
fn default_envelope_samples() -> usize {
    10_000
}
