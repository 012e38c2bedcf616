//! Command-line front end for `foldlift`: argument handling, text and JSON
//! rendering, and golden-table verification.

pub mod args;
pub mod commands;
pub mod golden;
pub mod resolve;

use std::ffi::OsString;

use clap::Parser;
use thiserror::Error;

pub use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(#[from] foldlift::Error),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Compute(_) | CliError::Io(_) | CliError::Json(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    /// Machine-readable prefix for diagnostics.
    pub fn code(&self) -> &'static str {
        use foldlift::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Mismatch(_) => "mismatch",
            CliError::Io(_) => "io",
            CliError::Json(_) => "json",
            CliError::Compute(e) => match e {
                E::LengthCapExceeded { .. } => "length-cap",
                E::SizeCapExceeded { .. } => "size-cap",
                E::NonTerminating { .. } => "non-terminating",
                E::InvariantViolation(_) => "invariant",
                E::NotAPowerOfTau => "coefficient",
                E::NotInQuotient => "not-in-quotient",
                E::NotReduced => "not-reduced",
                E::ParabolicNotThetaStable => "parabolic",
                _ => "compute",
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Outcome of one invocation: text for stdout, text for stderr, exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let msg = rendered.strip_prefix("error: ").unwrap_or(&rendered);
                Outcome { stdout: String::new(), stderr: format!("error[usage]: {msg}"), code: 1 }
            } else {
                Outcome { stdout: rendered, stderr: String::new(), code: 0 }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(stdout) => Outcome { stdout, stderr: String::new(), code: 0 },
        Err((stdout, e)) => Outcome { stdout, stderr: format!("error[{}]: {}\n", e.code(), e), code: e.exit_code() },
    }
}
