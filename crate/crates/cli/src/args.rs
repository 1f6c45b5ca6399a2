//! Argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use monodir_core::mc::FieldKind;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "monodir", version, about = "Unidirectionality of 2D random fields via the monogenic signal")]
pub struct Cli {
    /// Master seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a field and write it as a grid file.
    Gen(GenArgs),
    /// Print `Û` and the preferred direction of a grid.
    Measure(InArgs),
    /// Run the thresholded detector on a grid.
    Detect(DetectArgs),
    /// Sliding-window `Û` and direction over a grid, as CSV.
    Scan(ScanArgs),
    /// Monte Carlo sweeps, as CSV.
    #[command(subcommand)]
    Sweep(Sweep),
    /// Evaluate finite-sample formulas, as JSON.
    #[command(subcommand)]
    Theory(Theory),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Iso,
    Aniso,
    Uni,
    Separable,
    Planewave,
}

impl From<Kind> for FieldKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Iso => FieldKind::Iso,
            Kind::Aniso => FieldKind::Aniso,
            Kind::Uni => FieldKind::Uni,
            Kind::Separable => FieldKind::Separable,
            Kind::Planewave => FieldKind::Planewave,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value_t = Kind::Iso, conflicts_with = "spec")]
    pub kind: Kind,
    /// JSON spectral specification replacing `--kind`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub n: usize,
    /// Substream of the master seed.
    #[arg(long, default_value_t = 0)]
    pub stream: u64,
    /// Header path; the payload goes next to it with extension `.f64`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct InArgs {
    /// Grid header (`.json`) or CSV file.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub io: InArgs,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long)]
    pub lambda_l: f64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub io: InArgs,
    #[arg(long, default_value_t = 16)]
    pub window: usize,
    /// Defaults to the window side (disjoint tiles).
    #[arg(long)]
    pub stride: Option<usize>,
    #[arg(long, requires = "lambda_l")]
    pub epsilon: Option<f64>,
    #[arg(long, requires = "epsilon")]
    pub lambda_l: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Sweep {
    /// Mean `Û` of random plane waves against the leading-order prediction.
    Planewave {
        #[arg(long, value_delimiter = ',', required = true)]
        lambdas: Vec<f64>,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean deficit `1 − Û` of unidirectional fields across sizes.
    Uni {
        #[arg(long, value_delimiter = ',', default_values_t = [32, 64, 128, 256])]
        ns: Vec<usize>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0.05)]
        lambda_l: f64,
        /// JSON unidirectional spectral specification.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of `Û` for a field class.
    Pdf {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 50)]
        bins: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Empirical false-alarm rate against the Markov bound.
    Bound {
        #[arg(long, default_value_t = 1024)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        lambda_l: f64,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0.01, 0.02, 0.05, 0.1, 0.2, 0.3])]
        etas: Vec<f64>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Theory {
    /// Expected deficit for a random plane wave.
    #[command(name = "e-u2-planewave")]
    EU2Planewave {
        #[arg(long)]
        lambda0: f64,
        #[arg(long)]
        n: usize,
    },
    /// Expected deficit for the default unidirectional Matérn spectrum
    /// restricted to `[lambda_l, 1/2]`.
    #[command(name = "e-u2-unidirectional")]
    EU2Unidirectional {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        lambda_l: f64,
    },
    /// Upper bound on the expected deficit.
    U2Bound {
        #[arg(long)]
        lambda_l: f64,
        #[arg(long)]
        n: usize,
    },
    /// Markov bound on the false-alarm probability.
    PfaBound {
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        lambda_l: f64,
        #[arg(long)]
        n: usize,
    },
    /// Detection threshold for a false-alarm budget.
    Threshold {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        lambda_l: f64,
        #[arg(long)]
        n: usize,
    },
    /// One-sided direction term `G±`.
    GPm {
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        lambda0: f64,
        #[arg(long)]
        nu_deg: f64,
    },
    /// `G+ + G−`.
    GSum {
        #[arg(long)]
        lambda0: f64,
        #[arg(long)]
        nu_deg: f64,
    },
    /// Fourier coefficients of the boundary-correction function.
    BetaCoeffs {
        #[arg(long)]
        sigma1: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
    },
}
