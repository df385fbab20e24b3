use thiserror::Error;

/// Errors surfaced by the library. `InvariantViolation` carries a short stable
/// `anchor` string naming the mathematical identity that failed, so callers
/// (and the CLI) can match on it without parsing prose.
#[derive(Debug, Error)]
pub enum Error {
    #[error("computation budget exceeded after {steps} reduction steps (limit {limit})")]
    BudgetExceeded { steps: u64, limit: u64 },

    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("invariant violation [{anchor}]: {detail}")]
    InvariantViolation {
        anchor: &'static str,
        detail: String,
    },

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn violation(anchor: &'static str, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            anchor,
            detail: detail.into(),
        }
    }

    /// Stable anchor string for invariant violations, if any.
    pub fn anchor(&self) -> Option<&'static str> {
        match self {
            Error::InvariantViolation { anchor, .. } => Some(anchor),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
