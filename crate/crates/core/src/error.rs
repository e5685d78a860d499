use alloc::string::String;

/// Errors raised by the library.
///
/// Everything except [`Error::Internal`] and [`Error::Overflow`] is a domain
/// rejection: the input was well formed but outside what the operation accepts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{shape} is not ({t},{d})-admissible")]
    NotAdmissible { shape: String, t: u32, d: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parameters outside the defined range: {0}")]
    OutOfRange(String),
    #[error("not an initial segment: {0}")]
    NotInitialSegment(String),
    #[error("inconsistent weight: terms {first} and {second} differ")]
    InconsistentWeight { first: String, second: String },
    #[error("cost cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: &'static str, needed: u64, cap: u64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for rejections caused by the input rather than by a bug.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::Overflow(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
