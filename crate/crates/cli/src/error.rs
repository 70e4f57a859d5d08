use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] diskdet_core::Error),

    #[error("selftest: {failed} of {total} checks failed")]
    SelftestFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Process exit status: 1 for bad input, 2 for domain errors, 3 for
    /// numerical failures.
    pub fn exit_code(&self) -> i32 {
        use diskdet_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Config { .. } | CliError::Io { .. } => 1,
            CliError::Core(E::Invalid(_)) => 1,
            CliError::Core(E::Domain(_) | E::UnsupportedSector { .. }) => 2,
            CliError::Core(E::NonConvergence { .. } | E::Inconsistent { .. }) => 3,
            CliError::SelftestFailed { .. } => 3,
        }
    }
}
