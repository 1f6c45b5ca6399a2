//! Unidirectionality measure, monogenic direction, and the coherency and
//! gradient-tensor baselines.

use crate::error::{Error, Result};
use crate::grid::RealGrid;
use crate::riesz::MonogenicGrid;
use crate::stats::{cov_zero, r_matrix, CovZero, RMatrix};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectionalityResult {
    pub u_hat: f64,
    /// Radians in `[0, π)`; `None` when the eigenvalues of R̂ coincide.
    pub angle: Option<f64>,
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub cov: CovZero,
}

/// `2 λmax(R̂) / (r̂ff + r̂gg + r̂hh) - 1` and the dominant direction.
pub fn unidirectionality(m: &MonogenicGrid) -> Result<DirectionalityResult> {
    from_cov(cov_zero(m))
}

pub fn from_cov(cov: CovZero) -> Result<DirectionalityResult> {
    if !(cov.rff > 0.0) {
        return Err(Error::Domain("field has zero power after mean removal".into()));
    }
    let r: RMatrix = r_matrix(&cov);
    let (lambda_max, lambda_min) = r.eigenvalues();
    let total = cov.rff + cov.rgg + cov.rhh;
    let u_hat = 2.0 * lambda_max / total - 1.0;
    let angle = if lambda_max - lambda_min < 1e-12 * cov.rff { None } else { Some(r.dominant_angle()) };
    Ok(DirectionalityResult { u_hat, angle, lambda_max, lambda_min, cov })
}

/// `(λmax - λmin) / (λmax + λmin)` of `J = [[r̂gg, r̂gh], [r̂gh, r̂hh]]`.
pub fn coherency_index(m: &MonogenicGrid) -> Result<f64> {
    let c = cov_zero(m);
    let trace = c.rgg + c.rhh;
    if !(trace > 0.0) {
        return Err(Error::Domain("Riesz channels carry no power".into()));
    }
    Ok((c.rgg - c.rhh).hypot(2.0 * c.rgh) / trace)
}

/// Direction of variation from the periodic central-difference gradient
/// tensor, in `[0, π)`. This is the normal to the minimum-eigenvalue
/// eigenvector, so it is directly comparable with the monogenic angle.
/// `None` when the tensor is a multiple of the identity.
pub fn tensor_direction(f: &RealGrid) -> Result<Option<f64>> {
    let n = f.n();
    if n < 4 {
        return Err(Error::InvalidParameter(format!("tensor direction needs n >= 4, got {n}")));
    }
    let (mut s11, mut s12, mut s22) = (0.0, 0.0, 0.0);
    for r in 0..n {
        let (up, down) = ((r + n - 1) % n, (r + 1) % n);
        for c in 0..n {
            let (left, right) = ((c + n - 1) % n, (c + 1) % n);
            let d1 = 0.5 * (f.get(r, right) - f.get(r, left));
            let d2 = 0.5 * (f.get(down, c) - f.get(up, c));
            s11 += d1 * d1;
            s12 += d1 * d2;
            s22 += d2 * d2;
        }
    }
    let spread = (0.5 * (s11 - s22)).hypot(s12);
    if !(spread > 1e-12 * (s11 + s22)) {
        return Ok(None);
    }
    Ok(Some((0.5 * (2.0 * s12).atan2(s11 - s22)).rem_euclid(PI)))
}

/// Smallest angular distance between two axial directions, in radians.
pub fn axial_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}
