//! Corner data: angles, the straight-wedge Dirichlet oracle, normalization
//! of curved corners, exponent lattices and the disk Poisson/Green
//! constructions.

pub mod angle;
pub mod dirichlet;
pub mod normalize;
pub mod wasow;
pub mod wedge;

use num_complex::Complex64;

use crate::error::Result;
use crate::lsurf::LPoint;

pub use angle::{is_resonant, Angle};
pub use dirichlet::{green_function, poisson_disk, DirichletSolver, DiskSolver};
pub use normalize::{normalize, CornerSpec, NormalizedCorner, Transform};
pub use wasow::{wasow_exponents, WasowLattice};
pub use wedge::{wedge_solve, EdgeTerm, WedgeProblem, WedgeSolution};

/// A harmonic function `u = Re f` on a region of `L`.
pub trait HarmonicEvaluator: Send + Sync {
    /// The holomorphic completion.
    fn f(&self, z: LPoint) -> Result<Complex64>;

    /// The harmonic function itself; defaults to `Re f`.
    fn u(&self, z: LPoint) -> Result<f64> {
        Ok(self.f(z)?.re)
    }
}

/// Five-point Laplacian of `ev.u` at `z` in a local Cartesian chart.
///
/// Returns `(Δ_h u, u(z))`.
pub fn fd_laplacian(ev: &dyn HarmonicEvaluator, z: LPoint, step: f64) -> Result<(f64, f64)> {
    let c = crate::lsurf::project(z);
    let at = |dx: f64, dy: f64| -> Result<f64> {
        let w = LPoint::from_complex_near(c + Complex64::new(dx, dy), z.phi())?;
        ev.u(w)
    };
    let u0 = ev.u(z)?;
    let sum = at(step, 0.0)? + at(-step, 0.0)? + at(0.0, step)? + at(0.0, -step)?;
    Ok(((sum - 4.0 * u0) / (step * step), u0))
}
