use thiserror::Error;

/// Errors raised by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KronError {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("internal verification failure: {0}")]
    Verification(String),
}

impl KronError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        KronError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, KronError>;
