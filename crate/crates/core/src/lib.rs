//! Constructive machinery for harmonic functions near planar corners.
//!
//! The crate works on the Riemann surface of the logarithm `L`, points of
//! which are pairs `(r, φ)` with an unreduced argument. On top of that it
//! provides:
//!
//! - [`lsurf`]: points of `L`, the multiplication and power maps, the
//!   conjugation `τ` and standard quadratic domains;
//! - [`series`]: truncated power and Puiseux series with radius bookkeeping
//!   and Cauchy tail bounds;
//! - [`germs`]: germs `z ↦ a·z^k·(1 + h(z))` with composition, inversion and
//!   `τ`-conjugation;
//! - [`logpower`]: finite log-power series `Σ P_α(log z) z^α`;
//! - [`corner`]: straight-wedge Dirichlet solutions, the normalization of
//!   corner data, exponent lattices and the disk Poisson/Green constructions;
//! - [`reflect`]: the iterated Schwarz reflection that continues a corner
//!   solution to a quadratic domain, with sampled certificates.
//!
//! Grid and sampling work goes through [`par`], which uses rayon when the
//! `parallel` feature is enabled.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// coefficient recursions read clearest with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod corner;
pub mod error;
pub mod germs;
pub mod logpower;
pub mod lsurf;
pub mod par;
pub mod reflect;
pub mod series;

pub use error::{Error, Result};
pub use germs::Germ;
pub use logpower::{Exponent, LogPowerSeries};
pub use lsurf::{LPoint, QuadraticDomain};
pub use num_complex::Complex64;
pub use series::{PowerSeries, PuiseuxSeries};

/// Default truncation order for series operations.
pub const DEFAULT_TRUNC_ORDER: usize = 32;
