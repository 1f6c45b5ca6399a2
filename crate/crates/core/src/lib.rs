//! Unidirectionality of 2D random fields through the monogenic signal.
//!
//! The pipeline is: [`riesz::monogenic`] builds the triple `(f, g, h)`,
//! [`stats::cov_zero`] reduces it to lag-0 covariances, and
//! [`measure::unidirectionality`] turns those into `Û` and a direction.
//! [`detect::detect`] adds the Markov-bound threshold, [`synth`] generates
//! the test field classes and [`theory`] carries the finite-sample formulas.

// `!(x > 0.0)` guards reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod detect;
pub mod error;
pub mod fft;
pub mod grid;
pub mod mc;
pub mod quad;
pub mod measure;
pub mod quaternion;
pub mod riesz;
pub mod stats;
pub mod synth;
pub mod theory;

pub use error::{Error, Result};
pub use grid::RealGrid;
pub use quaternion::{PureUnit, Quaternion};
pub use riesz::{monogenic, MonogenicGrid};
pub use synth::{PsdSpec, Seed};
