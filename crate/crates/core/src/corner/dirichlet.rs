//! Poisson integral on the unit disk and Green functions built from a
//! Dirichlet solver.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Trapezoidal rule for `(1/2π)∫ (1−|ξ|²)/|η−ξ|² h(η) dσ(η)` on `nodes`
/// equispaced points of the unit circle. Summation is sequential.
pub fn poisson_disk(h: &dyn Fn(Complex64) -> f64, xi: Complex64, nodes: usize) -> Result<f64> {
    if xi.norm() >= 1.0 {
        return Err(Error::InvalidInput(format!("|xi| = {} must be < 1", xi.norm())));
    }
    if nodes < 16 {
        return Err(Error::InvalidInput(format!("need at least 16 nodes, got {nodes}")));
    }
    let num = 1.0 - xi.norm_sqr();
    let mut acc = 0.0;
    for j in 0..nodes {
        let eta = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / nodes as f64);
        acc += num / (eta - xi).norm_sqr() * h(eta);
    }
    Ok(acc / nodes as f64)
}

/// Solves the Dirichlet problem for boundary data on a fixed domain.
pub trait DirichletSolver: Send + Sync {
    fn contains(&self, x: Complex64) -> bool;
    fn solve(&self, boundary: &dyn Fn(Complex64) -> f64, x: Complex64) -> Result<f64>;
}

#[derive(Debug, Clone, Copy)]
pub struct DiskSolver {
    pub nodes: usize,
}

impl DirichletSolver for DiskSolver {
    fn contains(&self, x: Complex64) -> bool {
        x.norm() < 1.0
    }

    fn solve(&self, boundary: &dyn Fn(Complex64) -> f64, x: Complex64) -> Result<f64> {
        poisson_disk(boundary, x, self.nodes)
    }
}

/// `G_y(x) = log(1/|x−y|) − u(x)` where `u` solves the Dirichlet problem
/// with data `log(1/|η−y|)`.
pub fn green_function(solver: &dyn DirichletSolver, y: Complex64, x: Complex64) -> Result<f64> {
    if x == y {
        return Err(Error::PoleCoincidence);
    }
    if !solver.contains(x) || !solver.contains(y) {
        return Err(Error::InvalidInput("both points must lie in the domain".into()));
    }
    let kernel = move |eta: Complex64| -(eta - y).norm().ln();
    let u = solver.solve(&kernel, x)?;
    Ok(-(x - y).norm().ln() - u)
}
