use thiserror::Error;

/// Errors raised by metric evaluation, geometric analysis and the harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Two points (or a point and a domain) live in different dimensions.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A point coincides (up to the boundary guard) with a puncture.
    #[error("point lies on the boundary (distance {distance:e} to the nearest puncture)")]
    OnBoundary { distance: f64 },

    /// A parameter is outside the range where the operation is defined.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Invalid configuration or argument combination.
    #[error("configuration error: {0}")]
    Config(String),

    /// Non-finite coordinates or an otherwise malformed input value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn out_of_range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
