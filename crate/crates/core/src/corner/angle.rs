//! Opening angles with an explicit rationality declaration.

use std::f64::consts::PI;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::logpower::Exponent;

/// An opening angle in `(0, 2π]`.
///
/// Whether `θ/π` is rational cannot be read off a float, so the caller
/// declares it. `Undeclared` angles can be used for geometry but not for
/// resonance decisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    /// `θ = (p/q)·π`, stored reduced.
    RationalPi { p: i64, q: i64 },
    /// `θ/π` declared irrational.
    Irrational { value: f64 },
    Undeclared { value: f64 },
}

impl Angle {
    pub fn rational_pi(p: i64, q: i64) -> Result<Self> {
        if q <= 0 || p <= 0 || p > 2 * q {
            return Err(Error::InvalidInput(format!("angle {p}/{q}·pi is not in (0, 2pi]")));
        }
        let g = p.gcd(&q);
        Ok(Angle::RationalPi { p: p / g, q: q / g })
    }

    pub fn irrational(value: f64) -> Result<Self> {
        check_range(value)?;
        Ok(Angle::Irrational { value })
    }

    pub fn undeclared(value: f64) -> Result<Self> {
        check_range(value)?;
        Ok(Angle::Undeclared { value })
    }

    pub fn value(&self) -> f64 {
        match *self {
            Angle::RationalPi { p, q } => p as f64 * PI / q as f64,
            Angle::Irrational { value } | Angle::Undeclared { value } => value,
        }
    }

    /// `θ/n`, keeping the declaration.
    pub fn divided(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cannot divide an angle by zero".into()));
        }
        Ok(match *self {
            Angle::RationalPi { p, q } => Angle::rational_pi(p, q * n as i64)?,
            Angle::Irrational { value } => Angle::Irrational { value: value / n as f64 },
            Angle::Undeclared { value } => Angle::Undeclared { value: value / n as f64 },
        })
    }
}

fn check_range(value: f64) -> Result<()> {
    if value > 0.0 && value <= 2.0 * PI {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("angle {value} is not in (0, 2pi]")))
    }
}

/// Whether `β·θ/π` is an integer.
///
/// Decided exactly for a rational `β` against a declared angle; a float
/// exponent or an undeclared angle is an error rather than a guess.
pub fn is_resonant(theta: &Angle, beta: &Exponent) -> Result<bool> {
    match *theta {
        Angle::Undeclared { value } => Err(Error::UndecidableAngle(value)),
        Angle::RationalPi { p, q } => match beta.exact() {
            Some(b) => {
                let t = b * num_rational::Rational64::new(p, q);
                Ok(t.is_integer())
            }
            None => Err(Error::ResonanceUndeclared { beta: beta.value() }),
        },
        Angle::Irrational { .. } => match beta.exact() {
            // a nonzero rational times an irrational is irrational
            Some(b) => Ok(*b.numer() == 0),
            None => Err(Error::ResonanceUndeclared { beta: beta.value() }),
        },
    }
}
