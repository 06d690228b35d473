use thiserror::Error;

/// Errors raised by argument validation across the crate.
///
/// Orbit escapes are not errors; they travel as [`crate::maps::Escape`]
/// values inside the result types.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("even-parity L(1, chi) requires a fundamental unit epsilon > 1")]
    MissingFundamentalUnit,
    #[error("domain violation: {0}")]
    DomainViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
