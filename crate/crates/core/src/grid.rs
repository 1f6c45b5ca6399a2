//! Square real grids with even side, stored row-major.
//!
//! Axis convention: `x1` is the column index and `x2` the row index, so the
//! sample at `(x1, x2)` lives at `data[x2 * n + x1]`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RealGrid {
    n: usize,
    data: Vec<f64>,
}

impl RealGrid {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::OddSide(n));
        }
        if data.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, got: data.len() });
        }
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { n, data })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![0.0; n * n])
    }

    /// Builds a grid from `f(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Self::new(n, data)
    }

    /// Internal constructor for data already known to be valid.
    pub(crate) fn from_parts(n: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn mean(&self) -> f64 {
        pairwise_sum(&self.data) / self.data.len() as f64
    }

    /// Sample variance with the `1/n²` normalization.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        let sq: Vec<f64> = self.data.iter().map(|v| (v - m) * (v - m)).collect();
        pairwise_sum(&sq) / sq.len() as f64
    }

    /// `(1/n²) Σ f²` without centering.
    pub fn mean_square(&self) -> f64 {
        let sq: Vec<f64> = self.data.iter().map(|v| v * v).collect();
        pairwise_sum(&sq) / sq.len() as f64
    }

    pub fn remove_mean(&self) -> Self {
        let m = self.mean();
        Self::from_parts(self.n, self.data.iter().map(|v| v - m).collect())
    }

    pub fn scaled(&self, a: f64) -> Self {
        Self::from_parts(self.n, self.data.iter().map(|v| v * a).collect())
    }

    /// Counterclockwise quarter turn in the `(x1, x2)` frame:
    /// `out(x1, x2) = in(x2, -x1)` with periodic indexing, so a pattern along
    /// angle `θ` ends up along `θ + π/2`.
    pub fn rotate90(&self) -> Self {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for x2 in 0..n {
            for x1 in 0..n {
                let src_x1 = x2;
                let src_x2 = (n - x1) % n;
                out[x2 * n + x1] = self.data[src_x2 * n + src_x1];
            }
        }
        Self::from_parts(n, out)
    }

    /// Copy of the `w × w` block whose top-left corner is `(row, col)`.
    pub fn window(&self, row: usize, col: usize, w: usize) -> Result<Self> {
        if row + w > self.n || col + w > self.n {
            return Err(Error::InvalidParameter(format!(
                "window {w} at ({row}, {col}) exceeds grid side {}",
                self.n
            )));
        }
        let mut data = Vec::with_capacity(w * w);
        for r in row..row + w {
            data.extend_from_slice(&self.data[r * self.n + col..r * self.n + col + w]);
        }
        Self::new(w, data)
    }
}

/// Pairwise summation; deterministic for a fixed input order.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 64 {
        return v.iter().sum();
    }
    let mid = v.len() / 2;
    pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
}
