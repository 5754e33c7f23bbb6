use thiserror::Error;

/// Errors raised by word operations, constructions and the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two words (or a word and a set) disagree in length or alphabet.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A parameter violates a precondition (p < 2, n < k, wrong parity of k, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A character lies outside `0..p`.
    #[error("character {character} is out of range for an alphabet of size {size}")]
    Domain { character: u32, size: u32 },
    /// A count or allocation would exceed the supported range.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Text could not be read as a word. `position` is 1-indexed.
    #[error("cannot parse word at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parameter<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
