use thiserror::Error;

/// Errors raised by the library.
///
/// `Guard` is kept separate from the domain errors so front ends can tell a
/// configurable size limit apart from invalid input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} exceeds limit {limit} (got {actual})")]
    Guard {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }

    pub(crate) fn guard(
        what: &'static str,
        limit: impl TryInto<u64>,
        actual: impl TryInto<u64>,
    ) -> Self {
        Error::Guard {
            what,
            limit: limit.try_into().unwrap_or(u64::MAX),
            actual: actual.try_into().unwrap_or(u64::MAX),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
