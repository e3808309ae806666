use std::fmt;

use mwg_core::Error;

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    /// A regression fixture failed, a candidate did not verify, or an
    /// internal consistency check tripped.
    Failure = 1,
    /// Unreadable or malformed input.
    Parse = 2,
    /// The ring or element is outside what the requested operation handles.
    Unsupported = 3,
    /// The operation needs to enumerate an infinite ring.
    Infinite = 4,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn new(status: ExitStatus, message: impl Into<String>) -> Self {
        CliError {
            status,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(ExitStatus::Parse, message)
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(ExitStatus::Failure, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn status_for(e: &Error) -> ExitStatus {
    match e {
        Error::Parse { .. }
        | Error::Descriptor(_)
        | Error::RingMismatch(_)
        | Error::Dimension(_)
        | Error::IncompatibleScalars(..)
        | Error::Precondition(_) => ExitStatus::Parse,
        Error::UnsupportedRing { .. } | Error::UnsupportedScalar(_) | Error::IndexCap(_) | Error::TooLarge(_) => {
            ExitStatus::Unsupported
        }
        Error::NotEnumerable => ExitStatus::Infinite,
        _ => ExitStatus::Failure,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(status_for(&e), e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapping() {
        assert_eq!(status_for(&Error::NotEnumerable), ExitStatus::Infinite);
        assert_eq!(status_for(&Error::IndexCap(16)), ExitStatus::Unsupported);
        assert_eq!(status_for(&Error::Descriptor("x".into())), ExitStatus::Parse);
        assert_eq!(status_for(&Error::Internal("x".into())), ExitStatus::Failure);
        assert_eq!(ExitStatus::Infinite.code(), 4);
    }
}
