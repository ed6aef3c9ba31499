use thiserror::Error;

/// Errors raised by the linear algebra, channel and bound routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A matrix or covariance does not describe a physical state.
    #[error("invalid state: {0}")]
    InvalidState(String),
    /// The operation is undefined for the given parameters.
    #[error("outside domain: {0}")]
    Domain(String),
    /// An objective returned a non-finite value during optimization.
    #[error("objective is not finite at x = {x} (value {value})")]
    Evaluation { x: f64, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
