//! Periodic discrete Riesz transforms and the monogenic triple.

use crate::error::{Error, Result};
use crate::fft;
use crate::grid::RealGrid;
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

/// Wavenumber `(k1, k2)` in radians/sample for signed bin `(l1, l2)`.
///
/// Ordinary bins use `2π l / n`. The Nyquist column and row are assigned
/// `±π` with the sign chosen so that `k(-l) = -k(l)` holds on every bin
/// that is not its own conjugate; this keeps filtered real input real and
/// is consistent with the quarter-turn `(k1, k2) -> (-k2, k1)`.
pub fn wavenumber(l1: i64, l2: i64, n: usize) -> (f64, f64) {
    let h = (n / 2) as i64;
    let step = 2.0 * PI / n as f64;
    let mut k1 = step * l1 as f64;
    let mut k2 = step * l2 as f64;
    if l1 == -h && l2 != 0 && l2 != -h {
        k1 = PI * (l2 as f64).signum();
    }
    if l2 == -h && l1 != 0 && l1 != -h {
        k2 = -PI * (l1 as f64).signum();
    }
    (k1, k2)
}

/// Bins equal to their own conjugate: DC plus the three Nyquist corners.
pub fn is_self_conjugate(l1: i64, l2: i64, n: usize) -> bool {
    let h = (n / 2) as i64;
    (l1 == 0 || l1 == -h) && (l2 == 0 || l2 == -h)
}

#[derive(Debug)]
pub struct RieszKernels {
    pub n: usize,
    pub k1: Vec<Complex64>,
    pub k2: Vec<Complex64>,
    /// `k1 + i k2`, used to obtain `g + i h` from one inverse transform.
    pub(crate) fused: Vec<Complex64>,
}

/// Kernels `-i k_l / |k|` in storage order; zero on the self-conjugate bins.
pub fn riesz_kernels(n: usize) -> Result<Arc<RieszKernels>> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddSide(n));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RieszKernels>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    Ok(guard.entry(n).or_insert_with(|| Arc::new(build_kernels(n))).clone())
}

fn build_kernels(n: usize) -> RieszKernels {
    let zero = Complex64::new(0.0, 0.0);
    let mut k1 = vec![zero; n * n];
    let mut k2 = vec![zero; n * n];
    let mut fused = vec![zero; n * n];
    for r in 0..n {
        for c in 0..n {
            let (l1, l2) = (fft::signed_bin(c, n), fft::signed_bin(r, n));
            if is_self_conjugate(l1, l2, n) {
                continue;
            }
            let (w1, w2) = wavenumber(l1, l2, n);
            let norm = w1.hypot(w2);
            let (a, b) = (w1 / norm, w2 / norm);
            let i = r * n + c;
            k1[i] = Complex64::new(0.0, -a);
            k2[i] = Complex64::new(0.0, -b);
            fused[i] = Complex64::new(b, -a);
        }
    }
    RieszKernels { n, k1, k2, fused }
}

/// The field and its two periodic Riesz transforms.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicGrid {
    f: RealGrid,
    g: RealGrid,
    h: RealGrid,
}

impl MonogenicGrid {
    pub fn f(&self) -> &RealGrid {
        &self.f
    }
    pub fn g(&self) -> &RealGrid {
        &self.g
    }
    pub fn h(&self) -> &RealGrid {
        &self.h
    }
    pub fn n(&self) -> usize {
        self.f.n()
    }
}

/// Removes the mean and the three Nyquist-corner components, which the
/// Riesz kernels annihilate.
pub fn riesz_admissible(field: &RealGrid) -> RealGrid {
    let n = field.n();
    let d = field.data();
    let mut sums = [0.0f64; 4];
    for r in 0..n {
        for c in 0..n {
            let v = d[r * n + c];
            let sc = if c % 2 == 0 { 1.0 } else { -1.0 };
            let sr = if r % 2 == 0 { 1.0 } else { -1.0 };
            sums[0] += v;
            sums[1] += v * sc;
            sums[2] += v * sr;
            sums[3] += v * sc * sr;
        }
    }
    let inv = 1.0 / (n * n) as f64;
    let [m, a, b, c] = sums.map(|s| s * inv);
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for col in 0..n {
            let sc = if col % 2 == 0 { 1.0 } else { -1.0 };
            let sr = if r % 2 == 0 { 1.0 } else { -1.0 };
            out.push(d[r * n + col] - m - a * sc - b * sr - c * sc * sr);
        }
    }
    RealGrid::from_parts(n, out)
}

/// Monogenic triple via one forward and one fused inverse transform.
pub fn monogenic(field: &RealGrid) -> Result<MonogenicGrid> {
    let n = field.n();
    let kern = riesz_kernels(n)?;
    let f = riesz_admissible(field);
    let mut spec = fft::forward_real(f.data(), n);
    for (s, k) in spec.iter_mut().zip(&kern.fused) {
        *s *= k;
    }
    fft::inverse(&mut spec, n);
    let g = spec.iter().map(|v| v.re).collect();
    let h = spec.iter().map(|v| v.im).collect();
    Ok(MonogenicGrid { f, g: RealGrid::from_parts(n, g), h: RealGrid::from_parts(n, h) })
}

/// Same triple with each Riesz channel inverted separately, returning the
/// largest imaginary residue relative to `max |f|`. Fails when the residue
/// exceeds 1e-9.
pub fn monogenic_checked(field: &RealGrid) -> Result<(MonogenicGrid, f64)> {
    let n = field.n();
    let kern = riesz_kernels(n)?;
    let f = riesz_admissible(field);
    let spec = fft::forward_real(f.data(), n);
    let scale = f.data().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut residue = 0.0f64;
    let mut channel = |k: &[Complex64]| {
        let mut buf: Vec<Complex64> = spec.iter().zip(k).map(|(s, k)| s * k).collect();
        fft::inverse(&mut buf, n);
        residue = buf.iter().fold(residue, |m, v| m.max(v.im.abs()));
        RealGrid::from_parts(n, buf.iter().map(|v| v.re).collect())
    };
    let g = channel(&kern.k1);
    let h = channel(&kern.k2);
    let rel = if scale > 0.0 { residue / scale } else { residue };
    if rel > 1e-9 {
        return Err(Error::ImaginaryResidue { residue: rel, tolerance: 1e-9 });
    }
    Ok((MonogenicGrid { f, g, h }, rel))
}
