//! Evaluation grids as CSV rows `r, phi, re_u, im_f, status`.

use corner_core::corner::HarmonicEvaluator;
use corner_core::{par, Error, LPoint, Result};

use crate::report::{fmt_num, Table};
use crate::schema::GridSpec;

/// Rows in φ-major order, then `r`. Points outside the continued domain
/// stay in the table with `status = outside` and NaN values.
pub fn emit_grid(ev: &dyn HarmonicEvaluator, grid: &GridSpec) -> Result<Table> {
    let rs = grid.r.points();
    let pts: Vec<LPoint> = grid
        .phi
        .points()
        .into_iter()
        .flat_map(|phi| rs.iter().map(move |&r| LPoint::new(r, phi)))
        .collect::<Result<_>>()?;
    let rows = par::try_map(&pts, |z| -> Result<Vec<String>> {
        let (u, im, status) = match ev.f(*z) {
            Ok(f) => (ev.u(*z)?, f.im, "ok"),
            Err(Error::OutsideExtension { .. }) => (f64::NAN, f64::NAN, "outside"),
            Err(e) => return Err(e),
        };
        Ok(vec![fmt_num(z.r()), fmt_num(z.phi()), fmt_num(u), fmt_num(im), status.to_string()])
    })?;
    let mut t = Table::new("grid", &["r", "phi", "re_u", "im_f", "status"]);
    t.rows = rows;
    Ok(t)
}
