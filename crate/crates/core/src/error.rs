use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("grid side must be even and positive, got {0}")]
    OddSide(usize),
    #[error("grid payload has {got} samples, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("grid contains a non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("quadrature did not converge within {nodes} nodes (error estimate {estimate:e})")]
    Quadrature { nodes: usize, estimate: f64 },
    #[error("imaginary residue {residue:e} exceeds tolerance {tolerance:e}")]
    ImaginaryResidue { residue: f64, tolerance: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
