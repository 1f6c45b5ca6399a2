//! Finite-sample deficit formulas, the Markov bound on the false-alarm
//! probability, threshold solving and Hankel-transform covariances of
//! isotropic fields.
//!
//! The deficit formulas keep the leading `1/N` term only; the `O(1/N²)`
//! remainder is dropped everywhere.

use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_with_breaks, ABS_TOL};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Lowest and highest frequency of a band-pass spectrum, cycles/sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandLimits {
    lambda_l: f64,
    lambda_h: f64,
}

impl BandLimits {
    pub fn new(lambda_l: f64, lambda_h: f64) -> Result<Self> {
        if !(lambda_l > 0.0 && lambda_l <= lambda_h && lambda_h <= 0.5) {
            return Err(Error::InvalidParameter(format!("band [{lambda_l}, {lambda_h}] must satisfy 0 < low <= high <= 1/2")));
        }
        Ok(Self { lambda_l, lambda_h })
    }
    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }
    pub fn lambda_h(&self) -> f64 {
        self.lambda_h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

fn check_direction(lambda0: f64, n1: f64, n2: f64) -> Result<()> {
    if !(lambda0 > 0.0 && lambda0 < 0.5) {
        return Err(Error::Domain(format!("frequency {lambda0} outside (0, 1/2)")));
    }
    if ((n1 * n1 + n2 * n2) - 1.0).abs() > 1e-9 {
        return Err(Error::Domain("direction must be a unit vector".into()));
    }
    Ok(())
}

/// Closed-form approximation of
/// `n1² ∫_0^{1/2} λ² / (sin²(πλ) (λ0² n1² + (λ0 n2 ± λ)²)) dλ`
/// obtained by replacing `λ²/sin²(πλ)` with its second-order expansion.
pub fn g_pm(sign: Sign, lambda0: f64, n1: f64, n2: f64) -> Result<f64> {
    check_direction(lambda0, n1, n2)?;
    if n1 == 0.0 {
        return Ok(0.0);
    }
    let s = sign.value();
    let a1 = n1.abs();
    let weight = 1.0 / (lambda0 * PI * PI) + lambda0 / 3.0 * (2.0 * n2 * n2 - 1.0);
    let angles = (1.0 / (2.0 * lambda0 * a1) + s * n2 / a1).atan() - s * (n2 / a1).atan();
    let log = (1.0 + s * n2 / lambda0 + 1.0 / (4.0 * lambda0 * lambda0)).ln();
    Ok(n1 * n1 / 6.0 + a1 * weight * angles - s * lambda0 * n1 * n1 * n2 / 3.0 * log)
}

/// `G = G₊ + G₋` with the two arctangents merged on the principal branch.
pub fn g_sum(lambda0: f64, n1: f64, n2: f64) -> Result<f64> {
    check_direction(lambda0, n1, n2)?;
    if n1 == 0.0 {
        return Ok(0.0);
    }
    let a1 = n1.abs();
    let l2 = 4.0 * lambda0 * lambda0;
    let weight = 1.0 / (lambda0 * PI * PI) + lambda0 / 3.0 * (2.0 * n2 * n2 - 1.0);
    let q = 4.0 * lambda0 * n2 / (1.0 + l2);
    let log = ((1.0 - q) / (1.0 + q)).ln();
    let angle = (4.0 * lambda0 * a1 / (l2 - 1.0)).atan() + PI;
    Ok(n1 * n1 / 3.0 + lambda0 * n1 * n1 * n2 / 3.0 * log + a1 * weight * angle)
}

/// `N · E[U₂]` for a single frequency: `4/(π²λ) − 4λ/9 + 1/3 − 4/π²`.
pub fn deficit_kernel(lambda: f64) -> f64 {
    4.0 / (PI * PI * lambda) - 4.0 * lambda / 9.0 + 1.0 / 3.0 - 4.0 / (PI * PI)
}

fn check_side(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddSide(n));
    }
    Ok(())
}

/// Expected deficit `E[1 − Û]` for a random plane wave (leading order).
pub fn e_u2_planewave(lambda0: f64, n: usize) -> Result<f64> {
    check_side(n)?;
    if !(lambda0 > 0.0 && lambda0 < 0.5) {
        return Err(Error::Domain(format!("frequency {lambda0} outside (0, 1/2)")));
    }
    Ok(deficit_kernel(lambda0) / n as f64)
}

/// Expected deficit for a unidirectional field with 1D spectrum `psd` on
/// `(0, 1/2)` (leading order).
pub fn e_u2_unidirectional(psd: impl Fn(f64) -> f64, n: usize) -> Result<f64> {
    e_u2_unidirectional_with_breaks(psd, n, &[])
}

/// As [`e_u2_unidirectional`] with extra quadrature breakpoints, for
/// spectra with narrow features.
pub fn e_u2_unidirectional_with_breaks(psd: impl Fn(f64) -> f64, n: usize, breaks: &[f64]) -> Result<f64> {
    check_side(n)?;
    let den = integrate_with_breaks(&psd, 0.0, 0.5, breaks, ABS_TOL * 1e-3)?;
    if !(den > 0.0) {
        return Err(Error::Domain("spectrum integrates to zero".into()));
    }
    let num = integrate_with_breaks(|l| psd(l) * deficit_kernel(l), 0.0, 0.5, breaks, ABS_TOL)?;
    Ok(num / den / n as f64)
}

/// The same ratio for a line spectrum `(λ_m, S_m)`.
pub fn e_u2_line_spectrum(lines: &[(f64, f64)], n: usize) -> Result<f64> {
    check_side(n)?;
    let den: f64 = lines.iter().map(|l| l.1).sum();
    if !(den > 0.0) {
        return Err(Error::Domain("spectrum has no power".into()));
    }
    let num: f64 = lines.iter().map(|&(l, s)| s * deficit_kernel(l)).sum();
    Ok(num / den / n as f64)
}

/// Upper bound on `E[U₂]` for spectra supported in `[λl, 1/2]`.
pub fn u2_bound(lambda_l: f64, n: usize) -> Result<f64> {
    check_side(n)?;
    if !(lambda_l > 0.0 && lambda_l < 0.5) {
        return Err(Error::Domain(format!("lower cutoff {lambda_l} outside (0, 1/2)")));
    }
    Ok(deficit_kernel(lambda_l) / n as f64)
}

/// Markov bound on `P(Û ≤ 1 − η)`; `vacuous` when it is not below one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PfaBound {
    pub value: f64,
    pub vacuous: bool,
}

pub fn pfa_bound(eta: f64, lambda_l: f64, n: usize) -> Result<PfaBound> {
    if !(eta > 0.0) {
        return Err(Error::Domain(format!("eta must be positive, got {eta}")));
    }
    u2_bound(lambda_l, n)?;
    let value = deficit_kernel(lambda_l) / (n as f64 * eta);
    Ok(PfaBound { value, vacuous: value >= 1.0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ThresholdOutcome {
    /// Reject unidirectionality when `Û < threshold = 1 − eta`.
    Threshold { threshold: f64, eta: f64 },
    /// The bound cannot reach the requested budget at this size.
    Undecidable { eta: f64 },
}

impl ThresholdOutcome {
    pub fn eta(&self) -> f64 {
        match *self {
            ThresholdOutcome::Threshold { eta, .. } | ThresholdOutcome::Undecidable { eta } => eta,
        }
    }
}

/// Solves `pfa_bound(η) = ε` for `η` and returns `1 − η`.
pub fn threshold_for_epsilon(epsilon: f64, lambda_l: f64, n: usize) -> Result<ThresholdOutcome> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Domain(format!("false-alarm budget {epsilon} outside (0, 1)")));
    }
    let eta = u2_bound(lambda_l, n)? / epsilon;
    Ok(if eta >= 1.0 {
        ThresholdOutcome::Undecidable { eta }
    } else {
        ThresholdOutcome::Threshold { threshold: 1.0 - eta, eta }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelOrder {
    Zero,
    One,
}

/// `∫_0^{k_max} S(k) J_α(kξ) k dk`.
pub fn inverse_hankel(s: impl Fn(f64) -> f64, order: HankelOrder, xi: f64, k_max: f64) -> Result<f64> {
    let bessel = |x: f64| match order {
        HankelOrder::Zero => libm::j0(x),
        HankelOrder::One => libm::j1(x),
    };
    integrate(|k| s(k) * bessel(k * xi) * k, 0.0, k_max)
}

/// Lag covariances of an isotropic field and its Riesz transforms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotropicCov {
    pub rff: f64,
    pub rgg: f64,
    pub rhh: f64,
    pub rfg: f64,
    pub rfh: f64,
    pub rgh: f64,
}

/// Covariances at lag `ξ (cos θ, sin θ)` for the isotropic spectrum `s(|k|)`
/// (wavenumber in radians), integrated up to `k_max`. Convention:
/// `r_ab(ξ) = E[a(x) b(x − ξ)]`.
pub fn isotropic_covariances(s: impl Fn(f64) -> f64, xi: f64, theta: f64, k_max: f64) -> Result<IsotropicCov> {
    if !(xi >= 0.0) {
        return Err(Error::Domain(format!("lag magnitude must be nonnegative, got {xi}")));
    }
    let h0 = inverse_hankel(&s, HankelOrder::Zero, xi, k_max)?;
    let h1 = inverse_hankel(&s, HankelOrder::One, xi, k_max)?;
    // (1/ξ) ∫ S(k) J1(kξ) dk, with its ξ → 0 limit ∫ S k dk / 2.
    let h1_over = if xi == 0.0 {
        0.5 * h0
    } else {
        integrate(|k| s(k) * libm::j1(k * xi), 0.0, k_max)? / xi
    };
    let (st, ct) = theta.sin_cos();
    let (s2, c2) = (2.0 * theta).sin_cos();
    let tau = 2.0 * PI;
    Ok(IsotropicCov {
        rff: tau * h0,
        rgg: tau * ct * ct * h0 - tau * c2 * h1_over,
        rhh: tau * st * st * h0 + tau * c2 * h1_over,
        rfg: -tau * ct * h1,
        rfh: -tau * st * h1,
        rgh: s2 * (PI * h0 - tau * h1_over),
    })
}
