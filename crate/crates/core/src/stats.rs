//! Sample covariances of the monogenic triple.

use crate::fft;
use crate::grid::{pairwise_sum, RealGrid};
use crate::quaternion::{DirectionalBasis, PureUnit, Quaternion};
use crate::riesz::MonogenicGrid;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Lag-0 sample covariances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovZero {
    pub rff: f64,
    pub rgg: f64,
    pub rhh: f64,
    pub rgh: f64,
}

/// Symmetric 2×2 matrix `[[a, b], [b, c]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl RMatrix {
    pub fn trace(&self) -> f64 {
        self.a + self.c
    }

    /// `(λmax, λmin)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mid = 0.5 * (self.a + self.c);
        let rad = (0.5 * (self.a - self.c)).hypot(self.b);
        (mid + rad, mid - rad)
    }

    /// Angle of the dominant eigenvector in `[0, π)`.
    pub fn dominant_angle(&self) -> f64 {
        let t = 0.5 * (2.0 * self.b).atan2(self.a - self.c);
        t.rem_euclid(std::f64::consts::PI)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuatCov {
    pub rmm: Quaternion,
    pub rmmi: Quaternion,
    pub rmmj: Quaternion,
}

fn mean_product(a: &[f64], b: &[f64]) -> f64 {
    let p: Vec<f64> = a.iter().zip(b).map(|(x, y)| x * y).collect();
    pairwise_sum(&p) / p.len() as f64
}

pub fn cov_zero(m: &MonogenicGrid) -> CovZero {
    let (f, g, h) = (m.f().data(), m.g().data(), m.h().data());
    CovZero {
        rff: mean_product(f, f),
        rgg: mean_product(g, g),
        rhh: mean_product(h, h),
        rgh: mean_product(g, h),
    }
}

pub fn r_matrix(c: &CovZero) -> RMatrix {
    RMatrix { a: c.rff + c.rgg - c.rhh, b: 2.0 * c.rgh, c: c.rff - c.rgg + c.rhh }
}

/// Quaternion grid as four component planes.
#[derive(Debug, Clone)]
pub struct QuatGrid {
    pub n: usize,
    pub parts: [Vec<f64>; 4],
}

impl QuatGrid {
    pub fn from_monogenic(m: &MonogenicGrid) -> Self {
        let n = m.n();
        Self {
            n,
            parts: [m.f().data().to_vec(), m.g().data().to_vec(), m.h().data().to_vec(), vec![0.0; n * n]],
        }
    }

    pub fn at(&self, i: usize) -> Quaternion {
        Quaternion::new(self.parts[0][i], self.parts[1][i], self.parts[2][i], self.parts[3][i])
    }

    pub fn involution(&self, eta: PureUnit) -> Self {
        let mut parts: [Vec<f64>; 4] = Default::default();
        for p in parts.iter_mut() {
            p.reserve(self.n * self.n);
        }
        for i in 0..self.n * self.n {
            let q = self.at(i).involution(eta);
            parts[0].push(q.w);
            parts[1].push(q.x);
            parts[2].push(q.y);
            parts[3].push(q.z);
        }
        Self { n: self.n, parts }
    }
}

/// `(1/n²) Σ_x p(x) q(x - lag)*` with circular indexing; `lag = (d1, d2)`
/// along `(x1, x2)`.
pub fn quat_cross_cov(p: &QuatGrid, q: &QuatGrid, lag: (i64, i64)) -> Quaternion {
    let n = p.n;
    let mut acc = [0.0f64; 4];
    for x2 in 0..n {
        let y2 = (x2 as i64 - lag.1).rem_euclid(n as i64) as usize;
        for x1 in 0..n {
            let y1 = (x1 as i64 - lag.0).rem_euclid(n as i64) as usize;
            let v = p.at(x2 * n + x1) * q.at(y2 * n + y1).conj();
            acc[0] += v.w;
            acc[1] += v.x;
            acc[2] += v.y;
            acc[3] += v.z;
        }
    }
    let s = 1.0 / (n * n) as f64;
    Quaternion::new(acc[0] * s, acc[1] * s, acc[2] * s, acc[3] * s)
}

pub fn quat_cov_zero(m: &MonogenicGrid) -> QuatCov {
    let q = QuatGrid::from_monogenic(m);
    QuatCov {
        rmm: quat_cross_cov(&q, &q, (0, 0)),
        rmmi: quat_cross_cov(&q, &q.involution(PureUnit::I), (0, 0)),
        rmmj: quat_cross_cov(&q, &q.involution(PureUnit::J), (0, 0)),
    }
}

/// All circular lags of `(1/n²) Σ_x a(x) b(x - ξ)`, indexed like the grid
/// (`out[d2 * n + d1]` for lag `(d1, d2)` taken mod n).
pub fn lagged_cross_cov(a: &RealGrid, b: &RealGrid) -> Vec<f64> {
    let n = a.n();
    assert_eq!(n, b.n(), "grids differ in size");
    let fa = fft::forward_real(a.data(), n);
    let fb = fft::forward_real(b.data(), n);
    let mut prod: Vec<Complex64> = fa.iter().zip(&fb).map(|(x, y)| x * y.conj()).collect();
    fft::inverse(&mut prod, n);
    let s = 1.0 / (n * n) as f64;
    prod.iter().map(|v| v.re * s).collect()
}

/// Lags used by [`propriety_defect`].
pub const DEFECT_LAGS: [(i64, i64); 5] = [(0, 0), (1, 0), (0, 1), (2, 3), (5, 5)];

/// RMS of `|r̂_{m m^(η')}(ξ)|` over [`DEFECT_LAGS`], divided by `r̂_mm(0)`,
/// with `η' = -sin(ν) i + cos(ν) j`. Lies in `[0, 1]`.
pub fn propriety_defect(m: &MonogenicGrid, nu: f64) -> f64 {
    let q = QuatGrid::from_monogenic(m);
    let basis = DirectionalBasis::new(nu);
    let inv = q.involution(basis.eta_perp);
    let power = quat_cross_cov(&q, &q, (0, 0)).w;
    if power <= 0.0 {
        return 0.0;
    }
    let ms: f64 = DEFECT_LAGS
        .iter()
        .map(|&lag| quat_cross_cov(&q, &inv, lag).norm_sqr())
        .sum::<f64>()
        / DEFECT_LAGS.len() as f64;
    ms.sqrt() / power
}
