//! Input errors of the command-line tool.

use std::path::PathBuf;

use thiserror::Error;

/// Errors that stop a command before any check runs. All map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    /// The target is neither a catalog name nor an existing file.
    #[error("unknown target {0:?}: not a catalog name or an existing file")]
    UnknownTarget(String),
    /// The algebra file is not valid JSON or does not fit the schema.
    #[error("parse error at {position}: {message}")]
    ParseError {
        /// `line L column C` for syntax errors, a JSON path for schema errors.
        position: String,
        /// Description of the problem.
        message: String,
    },
    /// The structure constants violate the Jacobi identity.
    #[error("Jacobi identity fails for (e{i}, e{j}, e{k}) in component e{l}")]
    JacobiViolation {
        /// First basis index (1-based).
        i: usize,
        /// Second basis index (1-based).
        j: usize,
        /// Third basis index (1-based).
        k: usize,
        /// Offending output component (1-based).
        l: usize,
    },
    /// A flag value could not be parsed.
    #[error("invalid {flag}: {message}")]
    BadFlag {
        /// Flag name, e.g. `--params`.
        flag: &'static str,
        /// Description of the problem.
        message: String,
    },
    /// A catalog algebra could not be instantiated.
    #[error(transparent)]
    Lie(#[from] liebialg::liealg::LieError),
    /// Reading the input or writing the report failed.
    #[error("{}: {source}", .path.display())]
    Io {
        /// File involved.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
