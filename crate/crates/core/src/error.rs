use thiserror::Error;

use crate::scalar::ScalarKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible scalars: {0} and {1}")]
    IncompatibleScalars(ScalarKind, ScalarKind),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid ring descriptor: {0}")]
    Descriptor(String),

    #[error("element does not belong to this ring: {0}")]
    RingMismatch(String),

    #[error("ring is infinite and cannot be enumerated")]
    NotEnumerable,

    #[error("ring has {0} elements, more than the enumeration limit")]
    TooLarge(u128),

    #[error("scalar kind {0} is not a field")]
    UnsupportedScalar(ScalarKind),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported ring for {op}: {reason}")]
    UnsupportedRing { op: &'static str, reason: String },

    #[error("{0} has no Drazin inverse in this ring")]
    NotDrazinInvertible(String),

    #[error("index search exceeded the cap of {0}")]
    IndexCap(u32),

    #[error("invalid pair: {0}")]
    InvalidPair(String),

    #[error("invalid idempotent: {0}")]
    InvalidIdempotent(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn unsupported(op: &'static str, reason: impl Into<String>) -> Self {
        Error::UnsupportedRing {
            op,
            reason: reason.into(),
        }
    }
}
