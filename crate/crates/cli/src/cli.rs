use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{self, Format, JobSpec, Output, Query};
use crate::error::CliError;
use crate::parse;

#[derive(Debug, Parser)]
#[command(
    name = "tribisect",
    version,
    about = "Area-bisecting lines of a triangle with a given direction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the bisector of each queried direction and audit it
    Bisect(JobArgs),
    /// Write the sampled bisector family as a dataset
    Family(JobArgs),
    /// Plot the triangle, its edge-bisects and the queried bisectors as SVG
    Render(JobArgs),
    /// Compare the solver against the brute-force oracle
    Verify(JobArgs),
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Three vertices "xA,yA xB,yB xC,yC"
    #[arg(long, allow_hyphen_values = true)]
    pub triangle: String,
    /// Direction "dx,dy" (repeatable)
    #[arg(long = "dir", allow_hyphen_values = true)]
    pub dirs: Vec<String>,
    /// Slope as a real number, or "vertical" (repeatable)
    #[arg(long = "slope", allow_hyphen_values = true)]
    pub slopes: Vec<String>,
    /// Samples per case for family sweeps
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    /// Relative area-gap tolerance for the oracle check
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output file (written atomically); stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Round reported (x, w) pairs to this many decimals
    #[arg(long)]
    pub dp: Option<u32>,
    /// Significant digits in text output
    #[arg(long, default_value_t = 6)]
    pub precision: usize,
}

impl JobArgs {
    pub fn to_spec(&self) -> Result<JobSpec, CliError> {
        let mut spec = JobSpec::new(parse::parse_triangle(&self.triangle)?);
        for d in &self.dirs {
            spec.queries.push(Query {
                label: format!("dir {d}"),
                input: parse::parse_direction(d)?,
            });
        }
        for s in &self.slopes {
            spec.queries.push(Query {
                label: format!("slope {s}"),
                input: parse::parse_slope(s)?,
            });
        }
        spec.samples = self.samples;
        spec.tol = self.tol;
        spec.out = self.out.clone();
        spec.format = self.format;
        spec.dp = self.dp;
        spec.precision = self.precision;
        Ok(spec)
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Bisect(a) => commands::cmd_bisect(&a.to_spec()?),
        Command::Family(a) => commands::cmd_family(&a.to_spec()?),
        Command::Render(a) => commands::cmd_render(&a.to_spec()?),
        Command::Verify(a) => commands::cmd_verify(&a.to_spec()?),
    }
}
