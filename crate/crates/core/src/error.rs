use thiserror::Error;

/// Errors produced by the numerical kernels and the assembly layers above them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The flux level falls in a chirality sector that is not implemented.
    #[error(
        "unsupported chirality sector: level k = {k} < -1 (negative-chirality zero modes are not implemented)"
    )]
    UnsupportedSector { k: i64 },

    /// An iterative method failed to reach its tolerance.
    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    /// A flux profile or other input object is malformed.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A computed cross-check disagreed with its reference beyond tolerance.
    #[error("consistency check `{check}` failed: {detail}")]
    Inconsistent { check: &'static str, detail: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn no_conv(what: &'static str, detail: impl Into<String>) -> Self {
        Error::NonConvergence {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
