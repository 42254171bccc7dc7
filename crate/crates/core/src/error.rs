use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range caller input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested object provably does not exist.
    #[error("no such object exists: {0}")]
    Nonexistence(String),

    /// Parameters outside the range a particular construction covers.
    #[error("parameters out of domain: {0}")]
    OutOfDomain(String),

    /// Base case not handled by a low-level builder; use the dispatcher instead.
    #[error("unsupported base case: {0}")]
    Unsupported(String),

    #[error("groups {src:?} and {dst:?} are not isomorphic")]
    NoIsomorphism { src: Vec<u64>, dst: Vec<u64> },

    /// Two operands belong to different group presentations.
    #[error("presentation mismatch: {left:?} vs {right:?}")]
    PresentationMismatch { left: Vec<u64>, right: Vec<u64> },

    /// A size bound was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A search ran out of its node budget before reaching a verdict.
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("parse error at row {row}, col {col}: {message}")]
    Parse {
        row: usize,
        col: usize,
        message: String,
    },

    /// A constructor produced output that failed the verifier. Always a bug.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn nonexistence(msg: impl Into<String>) -> Self {
        Error::Nonexistence(msg.into())
    }

    pub(crate) fn out_of_domain(msg: impl Into<String>) -> Self {
        Error::OutOfDomain(msg.into())
    }
}
