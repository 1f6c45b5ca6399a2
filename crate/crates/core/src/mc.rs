//! Seeded Monte Carlo sweeps over the field classes.
//!
//! Trial `t` of sweep point `p` always uses stream `(p << 32) | t` of the
//! master seed, so results do not depend on how rayon schedules the work.

use crate::detect::DetectorConfig;
use crate::error::{Error, Result};
use crate::grid::pairwise_sum;
use crate::measure::unidirectionality;
use crate::riesz::monogenic;
use crate::synth::{generate, AngleChoice, PsdSpec, Seed};
use crate::theory::{e_u2_line_spectrum, e_u2_planewave, pfa_bound, u2_bound};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Iso,
    Aniso,
    Uni,
    Separable,
    Planewave,
}

impl FieldKind {
    pub fn default_spec(self) -> PsdSpec {
        match self {
            FieldKind::Iso => PsdSpec::isotropic(),
            FieldKind::Aniso => PsdSpec::anisotropic(),
            FieldKind::Uni => PsdSpec::unidirectional(AngleChoice::RANDOM),
            FieldKind::Separable => PsdSpec::separable(),
            FieldKind::Planewave => PsdSpec::plane_wave(0.125),
        }
    }
}

pub fn stream_id(point: usize, trial: usize) -> u64 {
    ((point as u64) << 32) | trial as u64
}

/// `Û` for each trial of `spec` at size `n`, in trial order.
pub fn sample_u_hat(spec: &PsdSpec, n: usize, trials: usize, master: u64, point: usize) -> Result<Vec<f64>> {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let f = generate(spec, n, Seed::new(master, stream_id(point, t)))?;
            Ok(unidirectionality(&monogenic(&f)?)?.u_hat)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanSe {
    pub mean: f64,
    pub stderr: f64,
}

pub fn mean_se(v: &[f64]) -> MeanSe {
    let n = v.len() as f64;
    let mean = pairwise_sum(v) / n;
    if v.len() < 2 {
        return MeanSe { mean, stderr: 0.0 };
    }
    let sq: Vec<f64> = v.iter().map(|x| (x - mean) * (x - mean)).collect();
    let var = pairwise_sum(&sq) / (n - 1.0);
    MeanSe { mean, stderr: (var / n).sqrt() }
}

pub fn median(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(|a, b| a.total_cmp(b));
    let m = s.len() / 2;
    if s.len().is_multiple_of(2) {
        0.5 * (s[m - 1] + s[m])
    } else {
        s[m]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub density: Vec<f64>,
    pub samples: Vec<f64>,
}

impl Histogram {
    pub fn from_samples(samples: Vec<f64>, bins: usize) -> Self {
        let edges: Vec<f64> = (0..=bins).map(|i| i as f64 / bins as f64).collect();
        let mut counts = vec![0usize; bins];
        for &u in &samples {
            let b = ((u * bins as f64).floor() as isize).clamp(0, bins as isize - 1) as usize;
            counts[b] += 1;
        }
        let width = 1.0 / bins as f64;
        let total = samples.len() as f64;
        let density = counts.iter().map(|&c| c as f64 / (total * width)).collect();
        Self { edges, density, samples }
    }

    /// Fraction of samples in `[lo, hi]`.
    pub fn mass_in(&self, lo: f64, hi: f64) -> f64 {
        self.samples.iter().filter(|&&u| u >= lo && u <= hi).count() as f64 / self.samples.len() as f64
    }

    pub fn median(&self) -> f64 {
        median(&self.samples)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_lo,bin_hi,density\n");
        for (i, d) in self.density.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", self.edges[i], self.edges[i + 1], d);
        }
        out
    }
}

/// Normalized histogram of `Û` on `[0, 1]`.
pub fn pdf_estimate(kind: FieldKind, n: usize, trials: usize, bins: usize, master: u64) -> Result<Histogram> {
    if trials < 100 {
        return Err(Error::InvalidParameter(format!("need at least 100 trials, got {trials}")));
    }
    if bins == 0 {
        return Err(Error::InvalidParameter("need at least one bin".into()));
    }
    Ok(Histogram::from_samples(sample_u_hat(&kind.default_spec(), n, trials, master, 0)?, bins))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    UHat,
    Deficit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub axis_name: String,
    pub quantity: Quantity,
    pub axis: Vec<f64>,
    pub mean: Vec<f64>,
    pub stderr: Vec<f64>,
    pub theory: Vec<f64>,
    pub bound: Vec<Option<f64>>,
    pub trials: usize,
    pub master: u64,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{},mean,stderr,theory,bound,trials\n", self.axis_name);
        for i in 0..self.axis.len() {
            let bound = self.bound[i].map(|b| b.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                self.axis[i], self.mean[i], self.stderr[i], self.theory[i], bound, self.trials
            );
        }
        out
    }

    /// Least-squares slope of `ln(mean)` against `ln(axis)`.
    pub fn log_log_slope(&self) -> f64 {
        let xs: Vec<f64> = self.axis.iter().map(|v| v.ln()).collect();
        let ys: Vec<f64> = self.mean.iter().map(|v| v.ln()).collect();
        let k = xs.len() as f64;
        let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        sxy / sxx
    }
}

/// Mean `Û` of random plane waves for each frequency, with `1 − E[U₂]`.
pub fn sweep_planewave(lambdas: &[f64], n: usize, trials: usize, master: u64) -> Result<SweepResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let mut res = SweepResult {
        axis_name: "lambda0".into(),
        quantity: Quantity::UHat,
        axis: lambdas.to_vec(),
        mean: vec![],
        stderr: vec![],
        theory: vec![],
        bound: vec![],
        trials,
        master,
    };
    for (p, &l0) in lambdas.iter().enumerate() {
        let u = sample_u_hat(&PsdSpec::plane_wave(l0), n, trials, master, p)?;
        let s = mean_se(&u);
        res.mean.push(s.mean);
        res.stderr.push(s.stderr);
        res.theory.push(1.0 - e_u2_planewave(l0, n)?);
        res.bound.push(None);
    }
    Ok(res)
}

/// Frequencies and densities of the comb used by unidirectional synthesis.
pub fn comb_lines(spec: &PsdSpec, n: usize) -> Result<Vec<(f64, f64)>> {
    let PsdSpec::Unidirectional1d { matern, band, .. } = spec else {
        return Err(Error::InvalidParameter("expected a unidirectional spec".into()));
    };
    let m = 4 * n;
    let [lo, hi] = band.unwrap_or([0.0, 0.5]);
    Ok((0..m)
        .map(|i| (i as f64 + 0.5) * 0.5 / m as f64)
        .filter(|&l| l >= lo && l <= hi)
        .map(|l| (l, matern.radial(l)))
        .collect())
}

/// Mean deficit `1 − Û` of unidirectional fields for each side length, with
/// the leading-order prediction on the synthesized line spectrum and the
/// bound at `lambda_l`.
pub fn sweep_unidirectional(
    ns: &[usize],
    trials: usize,
    spec: &PsdSpec,
    lambda_l: f64,
    master: u64,
) -> Result<SweepResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let mut res = SweepResult {
        axis_name: "n".into(),
        quantity: Quantity::Deficit,
        axis: ns.iter().map(|&n| n as f64).collect(),
        mean: vec![],
        stderr: vec![],
        theory: vec![],
        bound: vec![],
        trials,
        master,
    };
    for (p, &n) in ns.iter().enumerate() {
        let d: Vec<f64> = sample_u_hat(spec, n, trials, master, p)?.iter().map(|u| 1.0 - u).collect();
        let s = mean_se(&d);
        res.mean.push(s.mean);
        res.stderr.push(s.stderr);
        res.theory.push(e_u2_line_spectrum(&comb_lines(spec, n)?, n)?);
        res.bound.push(Some(u2_bound(lambda_l, n)?));
    }
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub eta: f64,
    /// Fraction of trials with `Û ≤ 1 − η`.
    pub empirical: f64,
    pub bound: f64,
    pub vacuous: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub lambda_l: f64,
    pub trials: usize,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eta,empirical,bound,vacuous\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", r.eta, r.empirical, r.bound, r.vacuous);
        }
        out
    }
}

/// Empirical false-alarm rate against the Markov bound on a grid of `η`.
pub fn bound_check(
    cfg: &DetectorConfig,
    spec: &PsdSpec,
    n: usize,
    trials: usize,
    etas: &[f64],
    master: u64,
) -> Result<BoundReport> {
    let u = sample_u_hat(spec, n, trials, master, 0)?;
    let rows = etas
        .iter()
        .map(|&eta| {
            let b = pfa_bound(eta, cfg.lambda_l(), n)?;
            let hits = u.iter().filter(|&&x| x <= 1.0 - eta).count();
            Ok(BoundRow { eta, empirical: hits as f64 / trials as f64, bound: b.value, vacuous: b.vacuous })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport { n, lambda_l: cfg.lambda_l(), trials, rows })
}
