use thiserror::Error;

/// An internal consistency check failed. Seeing one of these means a bug,
/// not bad input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("internal invariant violated: {message}")]
pub struct InvariantError {
    pub message: String,
}

impl InvariantError {
    pub fn new(message: impl Into<String>) -> Self {
        InvariantError {
            message: message.into(),
        }
    }
}

/// A syzygy cap too small to certify an infinite projective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("cap {cap} is below the sound threshold {required} (self-injective dimension + 1)")]
pub struct CapError {
    pub cap: u32,
    pub required: u32,
}
