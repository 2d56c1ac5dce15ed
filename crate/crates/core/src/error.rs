use thiserror::Error;

/// Errors raised by label construction and the branching/dimension routes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid label for SU({group}): {reason}")]
    InvalidLabel { group: usize, reason: String },

    #[error("Dynkin label at position {position} is negative ({value})")]
    NegativeDynkinLabel { position: usize, value: i64 },

    #[error("SU({group}) needs {expected} labels, got {actual}")]
    LengthMismatch {
        group: usize,
        expected: usize,
        actual: usize,
    },

    #[error(
        "SU({group}) is below the minimum rank for this operation (need SU({minimum}) or larger)"
    )]
    RankTooSmall { group: usize, minimum: usize },

    #[error("literal enumeration needs {required} terms, exceeding the cap of {cap}")]
    TermCapExceeded { required: String, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
