//! Error type shared by the core operations.

use alloc::string::String;
use core::fmt;

/// Errors produced by the core operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// `divide(S, T)` was called with `T` not a subsequence of `S`.
    NotASubsequence,
    /// A g-norm was requested for a sequence not supported on `<g>`.
    NotInCyclicSpan,
    /// The cross number is undefined for sequences containing `0`.
    ZeroElementInCrossNumber,
    /// A set of lengths was requested for a sequence with nonzero sum.
    NotZeroSum,
    /// Two factorizations with different products were compared.
    DifferentProducts,
    /// Full factorization enumeration exceeded its cap.
    TooManyFactorizations { cap: u64 },
    /// The length-set memo table exceeded its key cap.
    MemoLimit { cap: u64 },
    /// A guarded sweep would exceed the named guard.
    GuardExceeded { guard: &'static str },
    /// No atom pair has a length set other than `{2}`, so daleth is undefined.
    UndefinedDaleth,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NotASubsequence => write!(f, "not a subsequence"),
            Error::NotInCyclicSpan => write!(f, "support not contained in the cyclic span of g"),
            Error::ZeroElementInCrossNumber => {
                write!(f, "cross number undefined: sequence contains the zero element")
            }
            Error::NotZeroSum => write!(f, "sequence is not zero-sum"),
            Error::DifferentProducts => write!(f, "factorizations have different products"),
            Error::TooManyFactorizations { cap } => {
                write!(f, "too many factorizations (cap {cap})")
            }
            Error::MemoLimit { cap } => write!(f, "length-set memo exceeded {cap} keys"),
            Error::GuardExceeded { guard } => write!(f, "guard exceeded: {guard}"),
            Error::UndefinedDaleth => write!(f, "daleth undefined: every pair length set is {{2}}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
