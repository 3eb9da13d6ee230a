use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the input failed (shape mismatch, bad ordering,
    /// wrong total, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exact integer computation would have overflowed `i64`/`u64`.
    /// Arithmetic here is exact by contract, so overflow is reported
    /// instead of wrapping.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// The requested computation exceeds a documented resource bound.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Two independent routes to the same value disagreed. This always
    /// indicates a bug, never bad input.
    #[error("cross-check mismatch: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
