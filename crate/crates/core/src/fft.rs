//! Square 2D FFTs on row-major buffers, with one cached plan pair per size.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

struct Plans {
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

fn plans(n: usize) -> Arc<Plans> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Plans>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(n)
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            Arc::new(Plans {
                forward: planner.plan_fft_forward(n),
                inverse: planner.plan_fft_inverse(n),
            })
        })
        .clone()
}

fn transpose(buf: &mut [Complex64], n: usize) {
    const B: usize = 32;
    for rb in (0..n).step_by(B) {
        for cb in (rb..n).step_by(B) {
            for r in rb..(rb + B).min(n) {
                let start = if cb == rb { r + 1 } else { cb };
                for c in start..(cb + B).min(n) {
                    buf.swap(r * n + c, c * n + r);
                }
            }
        }
    }
}

fn run(buf: &mut [Complex64], n: usize, inverse: bool) {
    assert_eq!(buf.len(), n * n, "buffer is not n x n");
    let p = plans(n);
    let plan = if inverse { &p.inverse } else { &p.forward };
    let mut scratch = vec![Complex64::new(0.0, 0.0); plan.get_inplace_scratch_len()];
    plan.process_with_scratch(buf, &mut scratch);
    transpose(buf, n);
    plan.process_with_scratch(buf, &mut scratch);
    transpose(buf, n);
}

/// Unnormalized forward transform, `X(l) = Σ x(m) e^{-2πi l·m/n}`.
pub fn forward(buf: &mut [Complex64], n: usize) {
    run(buf, n, false);
}

/// Inverse transform including the `1/n²` factor.
pub fn inverse(buf: &mut [Complex64], n: usize) {
    run(buf, n, true);
    let s = 1.0 / (n * n) as f64;
    buf.iter_mut().for_each(|v| *v *= s);
}

/// Forward transform of a real grid.
pub fn forward_real(data: &[f64], n: usize) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = data.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    forward(&mut buf, n);
    buf
}

/// 1D transforms of arbitrary length through the same planner cache policy.
pub fn forward_1d(buf: &mut [Complex64]) {
    let p = plans(buf.len());
    p.forward.process(buf);
}

/// Signed bin index for storage position `i`: `0..n/2` then `-n/2..-1`.
pub fn signed_bin(i: usize, n: usize) -> i64 {
    if i < n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}
