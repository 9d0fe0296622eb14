//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A curve does not have the shape an operation requires
    /// (wrong scan label, peak at a range edge, all-zero values, ...).
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    /// A half-maximum crossing is not bracketed inside the sampled range.
    #[error("edge truncation: {0}")]
    EdgeTruncation(String),

    /// A least-squares fit could not be carried out at all
    /// (degenerate data, singular normal equations).
    #[error("fit failure: {0}")]
    FitFailure(String),

    /// The first intensity minimum is not an exterior ring: for
    /// alpha <= -pi the on-axis argument already sits past the first
    /// sinc zero and the opening-angle formula does not apply.
    #[error("degenerate phase-matching regime: {0}")]
    DegenerateRegime(String),

    /// Visibility of an all-zero curve.
    #[error("undefined visibility: {0}")]
    UndefinedVisibility(String),

    /// Projection onto the slit-pair subspace has (numerically) zero norm.
    #[error("empty subspace: {0}")]
    EmptySubspace(String),

    /// Scenario configuration failed schema validation. `path` is the
    /// dotted key path of the offending field.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A CSV or JSON document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    /// True for errors that indicate bad user input (config/schema/argument)
    /// rather than a numerical failure. The CLI maps these to exit code 2,
    /// everything else to exit code 3.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgument(_) | Error::Config { .. } | Error::Parse(_)
        )
    }
}
