//! The exponent lattice `{k + (ℓ/d)·α : k, ℓ ≥ 0}` below a cutoff.

use crate::error::{Error, Result};

const MERGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct WasowLattice {
    /// Sorted, with values closer than `1e-12` merged.
    pub exponents: Vec<f64>,
    /// `(n₀/d)·α`, the exponent of the leading data term after the angle map.
    pub leading: f64,
}

pub fn wasow_exponents(d: u32, alpha: f64, n0_over_d: f64, cutoff: f64) -> Result<WasowLattice> {
    if d == 0 || !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidInput(format!("need d >= 1 and alpha > 0, got d = {d}, alpha = {alpha}")));
    }
    if !(cutoff >= 0.0) || !cutoff.is_finite() {
        return Err(Error::InvalidInput(format!("cutoff must be finite and >= 0, got {cutoff}")));
    }
    let step = alpha / d as f64;
    let mut values = Vec::new();
    let mut k = 0u64;
    while (k as f64) <= cutoff {
        let mut l = 0u64;
        loop {
            let v = k as f64 + l as f64 * step;
            if v > cutoff + MERGE_TOL {
                break;
            }
            values.push(v);
            l += 1;
        }
        k += 1;
    }
    values.sort_by(f64::total_cmp);
    let mut exponents: Vec<f64> = Vec::with_capacity(values.len());
    for v in values {
        match exponents.last() {
            Some(last) if (v - last).abs() <= MERGE_TOL => {}
            _ => exponents.push(v),
        }
    }
    Ok(WasowLattice { exponents, leading: n0_over_d * alpha })
}
