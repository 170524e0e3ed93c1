//! Errors of the command line and their exit codes.

use std::io;

use elastica_core::Error;

/// Exit status for success.
pub const EXIT_OK: u8 = 0;
/// Exit status for a numerical failure or a failed invariant.
pub const EXIT_NUMERICAL: u8 = 1;
/// Exit status for bad flags or malformed input.
pub const EXIT_USAGE: u8 = 2;
/// Exit status for well-formed input that is not a valid convex body.
pub const EXIT_VALIDATION: u8 = 3;

/// Anything a subcommand can fail with.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A flag is out of range.
    #[error("{0}")]
    Usage(String),
    /// A body file could not be parsed.
    #[error("{path}:{line}: {message}")]
    Input {
        /// File name as given.
        path: String,
        /// 1-based line of the problem, 0 when unknown.
        line: u64,
        /// What was wrong.
        message: String,
    },
    /// The input parsed but is not an admissible body.
    #[error("invalid body: {0}")]
    Validation(Error),
    /// The numerics failed.
    #[error("{0}")]
    Numerical(Error),
    /// An invariant check failed; the summary has been reported.
    #[error("{0}")]
    Failed(String),
    /// Reading or writing a file failed.
    #[error("{context}: {source}")]
    Io {
        /// What was being done.
        context: String,
        /// Underlying error.
        source: io::Error,
    },
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Numerical(_) | CliError::Failed(_) | CliError::Io { .. } => EXIT_NUMERICAL,
        }
    }

    /// Wraps an IO error with a short description of the operation.
    pub fn io(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } => CliError::Usage(e.to_string()),
            Error::NonMonotone { .. }
            | Error::NonConvex { .. }
            | Error::Degenerate { .. }
            | Error::CoarseSampling { .. } => CliError::Validation(e),
            _ => CliError::Numerical(e),
        }
    }
}
