use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {text:?}: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("malformed y-specialization {text:?}: {reason}")]
    ParseYSpec { text: String, reason: String },

    #[error("malformed expression {text:?}: {reason}")]
    ParseExpr { text: String, reason: String },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("negative degree {0}")]
    NegativeDegree(i64),

    #[error("rank n = {n} is too small: {reason}")]
    RankTooSmall { n: usize, reason: String },

    #[error("sequence index {0} lies outside the window and no tail rule is given")]
    UnresolvedIndex(i64),

    #[error("input is not symmetric in the shifted variables")]
    Asymmetric,

    #[error("degenerate specialization: restriction of s*_{0} to its own fixed point vanishes")]
    DegenerateSpecialization(Partition),

    #[error("variable parity violation: {0}")]
    ParityViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An identity that must always hold failed; this indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// Coarse classification used by front-ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Domain,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ParsePartition { .. } | Error::ParseYSpec { .. } | Error::ParseExpr { .. } => {
                ErrorClass::Usage
            }
            Error::Inconsistency(_) => ErrorClass::Internal,
            _ => ErrorClass::Domain,
        }
    }
}
