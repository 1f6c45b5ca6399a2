//! Subcommand execution.

use crate::args::{Cli, Command, GenArgs, ScanArgs, SignArg, Sweep, Theory};
use crate::io::{load_grid, save_grid, IoError};
use crate::output::{angle_deg, num, Obj};
use crate::scan::scan;
use monodir_core::detect::{detect, Decision, DetectorConfig};
use monodir_core::mc::{self, FieldKind};
use monodir_core::measure::unidirectionality;
use monodir_core::synth::{beta_coeffs, generate, Matern, PsdSpec, Seed};
use monodir_core::theory::{self, Sign, ThresholdOutcome};
use monodir_core::{monogenic, Error};
use serde_json::Value;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Spec { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

/// Text to print (or write) and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

pub const EXIT_INVALID: u8 = 2;
pub const EXIT_UNDECIDABLE: u8 = 3;

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Gen(a) => gen(a, seed),
        Command::Measure(a) => {
            let f = load_grid(&a.input)?;
            let d = unidirectionality(&monogenic(&f)?)?;
            let text = Obj::new()
                .f("u_hat", d.u_hat)
                .v("angle_deg", angle_deg(d.angle))
                .f("lambda_max", d.lambda_max)
                .f("lambda_min", d.lambda_min)
                .u("n", f.n() as u64)
                .render();
            emit(text, a.out.as_deref())
        }
        Command::Detect(a) => {
            let f = load_grid(&a.io.input)?;
            let cfg = DetectorConfig::new(a.epsilon, a.lambda_l)?;
            let d = detect(&f, &cfg)?;
            let text = Obj::new()
                .f("u_hat", d.u_hat)
                .v("threshold", d.threshold.map_or(Value::Null, num))
                .s("decision", d.decision.as_str())
                .v("angle_deg", angle_deg(d.angle))
                .f("eta", d.eta)
                .render();
            let mut out = emit(text, a.io.out.as_deref())?;
            if d.decision == Decision::Undecidable {
                out.code = EXIT_UNDECIDABLE;
            }
            Ok(out)
        }
        Command::Scan(a) => run_scan(a),
        Command::Sweep(s) => sweep(s, seed),
        Command::Theory(t) => Ok(Outcome::ok(theory_json(t)?)),
    }
}

/// Writes `text` to `out` when given, otherwise returns it for stdout.
fn emit(text: String, out: Option<&Path>) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Write { path: path.into(), source })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn read_spec(path: &Path) -> Result<PsdSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Fs { path: path.into(), source })?;
    let spec: PsdSpec = serde_json::from_str(&text).map_err(|source| CliError::Spec { path: path.into(), source })?;
    spec.validate()?;
    Ok(spec)
}

fn gen(a: &GenArgs, seed: u64) -> Result<Outcome, CliError> {
    let (spec, label) = match &a.spec {
        Some(p) => (read_spec(p)?, "spec".to_string()),
        None => {
            let kind = FieldKind::from(a.kind);
            let label = serde_json::to_value(kind).expect("kind serializes");
            (kind.default_spec(), label.as_str().unwrap_or_default().to_string())
        }
    };
    let field = generate(&spec, a.n, Seed::new(seed, a.stream))?;
    let meta = BTreeMap::from([
        ("kind".to_string(), label),
        ("seed".to_string(), seed.to_string()),
        ("stream".to_string(), a.stream.to_string()),
        ("spec".to_string(), serde_json::to_string(&spec).expect("spec serializes")),
    ]);
    save_grid(&field, &a.out, meta)?;
    Ok(Outcome::ok(String::new()))
}

fn run_scan(a: &ScanArgs) -> Result<Outcome, CliError> {
    let f = load_grid(&a.io.input)?;
    let cfg = match (a.epsilon, a.lambda_l) {
        (Some(e), Some(l)) => Some(DetectorConfig::new(e, l)?),
        _ => None,
    };
    let res = scan(&f, a.window, a.stride.unwrap_or(a.window), cfg.as_ref())?;
    emit(res.to_csv(), a.io.out.as_deref())
}

fn sweep(s: &Sweep, seed: u64) -> Result<Outcome, CliError> {
    match s {
        Sweep::Planewave { lambdas, n, trials, out } => {
            emit(mc::sweep_planewave(lambdas, *n, *trials, seed)?.to_csv(), out.as_deref())
        }
        Sweep::Uni { ns, trials, lambda_l, spec, out } => {
            let spec = match spec {
                Some(p) => read_spec(p)?,
                None => FieldKind::Uni.default_spec(),
            };
            emit(mc::sweep_unidirectional(ns, *trials, &spec, *lambda_l, seed)?.to_csv(), out.as_deref())
        }
        Sweep::Pdf { kind, n, trials, bins, out } => {
            emit(mc::pdf_estimate((*kind).into(), *n, *trials, *bins, seed)?.to_csv(), out.as_deref())
        }
        Sweep::Bound { n, lambda_l, trials, etas, spec, out } => {
            let spec = match spec {
                Some(p) => read_spec(p)?,
                None => PsdSpec::unidirectional_bandpass(monodir_core::synth::AngleChoice::RANDOM, *lambda_l),
            };
            let cfg = DetectorConfig::new(0.05, *lambda_l)?;
            emit(mc::bound_check(&cfg, &spec, *n, *trials, etas, seed)?.to_csv(), out.as_deref())
        }
    }
}

fn direction(nu_deg: f64) -> (f64, f64) {
    let (s, c) = nu_deg.to_radians().sin_cos();
    (c, s)
}

fn theory_json(t: &Theory) -> Result<String, CliError> {
    let obj = match *t {
        Theory::EU2Planewave { lambda0, n } => Obj::new().f("value", theory::e_u2_planewave(lambda0, n)?),
        Theory::EU2Unidirectional { n, lambda_l } => {
            let m = Matern::DEFAULT;
            let psd = move |l: f64| if l >= lambda_l { m.radial(l) } else { 0.0 };
            Obj::new().f("value", theory::e_u2_unidirectional_with_breaks(psd, n, &[lambda_l])?)
        }
        Theory::U2Bound { lambda_l, n } => Obj::new().f("value", theory::u2_bound(lambda_l, n)?),
        Theory::PfaBound { eta, lambda_l, n } => {
            let b = theory::pfa_bound(eta, lambda_l, n)?;
            Obj::new().f("value", b.value).b("vacuous", b.vacuous)
        }
        Theory::Threshold { epsilon, lambda_l, n } => match theory::threshold_for_epsilon(epsilon, lambda_l, n)? {
            ThresholdOutcome::Threshold { threshold, eta } => {
                Obj::new().f("threshold", threshold).f("eta", eta).b("undecidable", false)
            }
            ThresholdOutcome::Undecidable { eta } => {
                Obj::new().v("threshold", Value::Null).f("eta", eta).b("undecidable", true)
            }
        },
        Theory::GPm { sign, lambda0, nu_deg } => {
            let (n1, n2) = direction(nu_deg);
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            Obj::new().f("value", theory::g_pm(sign, lambda0, n1, n2)?)
        }
        Theory::GSum { lambda0, nu_deg } => {
            let (n1, n2) = direction(nu_deg);
            Obj::new().f("value", theory::g_sum(lambda0, n1, n2)?)
        }
        Theory::BetaCoeffs { sigma1, alpha, l_max } => {
            let coeffs = beta_coeffs(sigma1, alpha, l_max)?;
            let l_max = l_max as i64;
            let rows = coeffs
                .iter()
                .zip(-l_max..)
                .map(|(c, l)| Obj::new().v("l", Value::from(l)).f("re", c.re).f("im", c.im).into_value())
                .collect();
            Obj::new().v("coefficients", Value::Array(rows))
        }
    };
    Ok(obj.render())
}
