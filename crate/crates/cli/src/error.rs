use std::path::PathBuf;

use thiserror::Error;
use tribisect::GeomError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {what} {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("{context}: {source}")]
    Geometry {
        context: String,
        #[source]
        source: GeomError,
    },
    #[error("{0} line(s) failed the area check")]
    OracleFailed(usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        CliError::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub fn geometry(context: impl Into<String>, source: GeomError) -> Self {
        CliError::Geometry {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Geometry { source, .. } => match source {
                GeomError::NonFinite(_)
                | GeomError::TooFewSamples(_)
                | GeomError::InvalidTolerance(_) => EXIT_PARSE,
                _ => EXIT_DEGENERATE,
            },
            CliError::OracleFailed(_) => EXIT_ORACLE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}
