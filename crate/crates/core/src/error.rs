use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
///
/// The variants fall into three families that the command-line front end maps
/// onto distinct exit codes: bad input (`InvalidParameter`, `Parse`,
/// `DimensionMismatch`, ...), violated preconditions of a construction
/// (`Precondition`, `WrongType`, `NotAWeightModule`, ...), and internal
/// consistency failures that indicate a bug (`TheoremViolation`,
/// `ConsistencyFailure`, `InternalInvariant`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("deformation parameters differ: {0} vs {1}")]
    QMismatch(String, String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size cap exceeded: {requested} > {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("not a weight module: {0}")]
    NotAWeightModule(String),
    #[error("module has type ({eps0},{eps1}); type (1,1) required")]
    WrongType { eps0: i8, eps1: i8 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("semisimplicity violated: {0}")]
    SemisimplicityViolation(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("criterion/oracle disagreement: {0}")]
    ConsistencyFailure(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Coarse classification used for exit codes and in-row error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Precondition,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidParameter(_)
            | Error::DivisionByZero
            | Error::Parse(_)
            | Error::DimensionMismatch { .. }
            | Error::QMismatch(..)
            | Error::IndexOutOfRange { .. }
            | Error::CapExceeded { .. }
            | Error::UnsupportedInput(_) => ErrorClass::Input,
            Error::NotAWeightModule(_)
            | Error::WrongType { .. }
            | Error::Precondition(_)
            | Error::SemisimplicityViolation(_) => ErrorClass::Precondition,
            Error::TheoremViolation(_) | Error::ConsistencyFailure(_) | Error::InternalInvariant(_) => {
                ErrorClass::Internal
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
