use alloc::string::String;

use crate::notation::ParseError;

/// Errors raised by the word algebra, the generators and the deciders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A letter, antimorphism or bi-sequence does not belong to the expected alphabet.
    #[error("domain error: {0}")]
    Domain(String),
    /// An alphabet or antimorphism definition is malformed.
    #[error("invalid definition: {0}")]
    Invalid(String),
    /// An operation was called outside its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A configured safety bound would be exceeded.
    #[error("resource limit: requested {requested} exceeds the cap of {cap}")]
    Resource { requested: usize, cap: usize },
    /// An internal invariant was breached. Always a bug.
    #[error("internal invariant breached: {0}")]
    Internal(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
