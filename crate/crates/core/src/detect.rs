//! End-to-end unidirectionality detector with a Markov-bound threshold.

use crate::error::{Error, Result};
use crate::fft;
use crate::grid::RealGrid;
use crate::measure::unidirectionality;
use crate::riesz::{monogenic, riesz_admissible};
use crate::theory::{threshold_for_epsilon, ThresholdOutcome};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorConfig {
    epsilon: f64,
    lambda_l: f64,
}

impl DetectorConfig {
    pub fn new(epsilon: f64, lambda_l: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!("epsilon {epsilon} outside (0, 1)")));
        }
        if !(lambda_l > 0.0 && lambda_l < 0.5) {
            return Err(Error::InvalidParameter(format!("lambda_l {lambda_l} outside (0, 1/2)")));
        }
        Ok(Self { epsilon, lambda_l })
    }
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Unidirectional,
    NotUnidirectional,
    Undecidable,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Unidirectional => "unidirectional",
            Decision::NotUnidirectional => "not-unidirectional",
            Decision::Undecidable => "undecidable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Detection {
    pub u_hat: f64,
    /// `None` when undecidable.
    pub threshold: Option<f64>,
    pub decision: Decision,
    pub angle: Option<f64>,
    pub eta: f64,
}

pub fn detect(field: &RealGrid, cfg: &DetectorConfig) -> Result<Detection> {
    let d = unidirectionality(&monogenic(field)?)?;
    let outcome = threshold_for_epsilon(cfg.epsilon, cfg.lambda_l, field.n())?;
    Ok(decide(d.u_hat, d.angle, outcome))
}

pub fn decide(u_hat: f64, angle: Option<f64>, outcome: ThresholdOutcome) -> Detection {
    match outcome {
        ThresholdOutcome::Threshold { threshold, eta } => Detection {
            u_hat,
            threshold: Some(threshold),
            decision: if u_hat >= threshold { Decision::Unidirectional } else { Decision::NotUnidirectional },
            angle,
            eta,
        },
        ThresholdOutcome::Undecidable { eta } => {
            Detection { u_hat, threshold: None, decision: Decision::Undecidable, angle, eta }
        }
    }
}

/// Advisory cutoff: the lowest radial frequency at which the cumulative
/// periodogram reaches `fraction` of the total power.
pub fn estimate_lambda_l(field: &RealGrid, fraction: f64) -> Result<f64> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidParameter(format!("fraction {fraction} outside (0, 1)")));
    }
    let n = field.n();
    let spec = fft::forward_real(riesz_admissible(field).data(), n);
    let mut bins: Vec<(f64, f64)> = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let (l1, l2) = (fft::signed_bin(c, n) as f64, fft::signed_bin(r, n) as f64);
            let p = spec[r * n + c].norm_sqr();
            if p > 0.0 {
                bins.push((l1.hypot(l2) / n as f64, p));
            }
        }
    }
    let total: f64 = bins.iter().map(|b| b.1).sum();
    if !(total > 0.0) {
        return Err(Error::Domain("field has zero power after mean removal".into()));
    }
    bins.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut acc = 0.0;
    for (lam, p) in bins {
        acc += p;
        if acc >= fraction * total {
            return Ok(lam.min(0.5));
        }
    }
    Ok(0.5)
}
