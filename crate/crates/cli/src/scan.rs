//! Sliding-window measurement over a large grid.

use monodir_core::detect::{decide, Decision, DetectorConfig};
use monodir_core::measure::unidirectionality;
use monodir_core::theory::threshold_for_epsilon;
use monodir_core::{monogenic, Error, RealGrid, Result};
use rayon::prelude::*;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    /// Window center.
    pub row: usize,
    pub col: usize,
    /// NaN for windows without power.
    pub u_hat: f64,
    pub angle: Option<f64>,
    pub decision: Option<Decision>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub window: usize,
    pub stride: usize,
    pub rows: Vec<ScanRow>,
}

/// Each window is mean-removed and transformed as an independent periodic
/// patch. Rows come out in row-major window order.
pub fn scan(field: &RealGrid, window: usize, stride: usize, cfg: Option<&DetectorConfig>) -> Result<ScanResult> {
    let n = field.n();
    if window == 0 || !window.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("window {window} must be even and positive")));
    }
    if window > n {
        return Err(Error::InvalidParameter(format!("window {window} exceeds grid side {n}")));
    }
    if stride == 0 {
        return Err(Error::InvalidParameter("stride must be positive".into()));
    }
    let outcome = cfg.map(|c| threshold_for_epsilon(c.epsilon(), c.lambda_l(), window)).transpose()?;
    let starts: Vec<usize> = (0..=n - window).step_by(stride).collect();
    let corners: Vec<(usize, usize)> = starts.iter().flat_map(|&r| starts.iter().map(move |&c| (r, c))).collect();
    let rows = corners
        .par_iter()
        .map(|&(r, c)| {
            let patch = field.window(r, c, window)?;
            let (u_hat, angle) = match unidirectionality(&monogenic(&patch)?) {
                Ok(d) => (d.u_hat, d.angle),
                Err(Error::Domain(_)) => (f64::NAN, None),
                Err(e) => return Err(e),
            };
            let decision = outcome.map(|o| {
                if u_hat.is_nan() {
                    Decision::NotUnidirectional
                } else {
                    decide(u_hat, angle, o).decision
                }
            });
            Ok(ScanRow { row: r + window / 2, col: c + window / 2, u_hat, angle, decision })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanResult { window, stride, rows })
}

impl ScanResult {
    pub fn to_csv(&self) -> String {
        let with_decision = self.rows.first().is_some_and(|r| r.decision.is_some());
        let mut out = String::from(if with_decision { "row,col,u_hat,angle_deg,decision\n" } else { "row,col,u_hat,angle_deg\n" });
        for r in &self.rows {
            let u = crate::output::num(r.u_hat);
            let a = crate::output::angle_deg(r.angle);
            let text = |v: serde_json::Value| match v {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            let _ = write!(out, "{},{},{},{}", r.row, r.col, text(u), text(a));
            if let Some(d) = r.decision {
                let _ = write!(out, ",{}", d.as_str());
            }
            out.push('\n');
        }
        out
    }
}
