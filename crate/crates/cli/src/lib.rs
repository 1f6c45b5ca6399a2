//! Command-line front end: grid files, the sliding-window scan and the
//! subcommand runner shared by the binary and its tests.

pub mod args;
pub mod io;
pub mod output;
pub mod run;
pub mod scan;

pub use run::{run, CliError, Outcome};
