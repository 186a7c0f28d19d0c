use thiserror::Error;

/// Errors raised by the library. Findings (an unsatisfiable instance, a
/// verifier witness) are never errors; they are ordinary return values.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments violate an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A bound formula was evaluated below the range where it is defined.
    #[error("outside the formula's domain: {0}")]
    Domain(String),

    /// Bridge endpoints agree in some coordinate.
    #[error("degenerate bridge: endpoints agree at coordinate {0}")]
    DegenerateBridge(usize),

    /// The instance exceeds a hard search-space cap.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// A coloring that was required to be proper is not.
    #[error("coloring is not proper: {0}")]
    NotProper(String),

    /// Malformed textual input (DIMACS or a coloring file).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An internal invariant failed; this is a defect, not a finding.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
