//! Command-line front end: input parsing, reports, family datasets, SVG
//! plots and solver-versus-oracle verification.

pub mod cli;
pub mod commands;
pub mod dataset;
pub mod error;
pub mod io;
pub mod parse;
pub mod report;
pub mod svg;

pub use cli::{run, Cli};
pub use commands::{Format, JobSpec, Output, Query};
pub use error::CliError;
