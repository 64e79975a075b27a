use thiserror::Error;

/// Errors raised by semigroup, ideal and census operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    InvalidGenerator(i64),
    #[error("generators have gcd {0} > 1, the complement would be infinite")]
    NotCoprime(i64),
    #[error("set is not additively closed: {0} + {1} is missing")]
    NotClosed(i64, i64),
    #[error("conductor {0} is not tight: {0} - 1 belongs to the set")]
    ConductorNotTight(i64),
    #[error("invalid element list: {0}")]
    InvalidElements(String),
    #[error("ideals belong to different semigroups")]
    ParentMismatch,
    #[error("second ideal is not contained in the first")]
    NotContained,
    #[error("ideal is not a proper integral ideal (need 0 not in E and E inside S)")]
    NotIntegralProper,
    #[error("not a relative ideal: {0}")]
    NotAnIdeal(String),
    #[error("operation is undefined for the degenerate semigroup N")]
    DegenerateDvr,
    #[error("second semigroup does not contain the first")]
    NotOversemigroup,
    #[error("bound {requested} exceeds the guard {limit}")]
    BoundTooLarge { requested: u32, limit: u32 },
    #[error("ideal window {requested} exceeds the guard {limit}")]
    WindowTooLarge { requested: u32, limit: u32 },
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::InvalidGenerator(_) => "InvalidGenerator",
            Error::NotCoprime(_) => "NotCoprime",
            Error::NotClosed(..) => "NotClosed",
            Error::ConductorNotTight(_) => "ConductorNotTight",
            Error::InvalidElements(_) => "InvalidElements",
            Error::ParentMismatch => "ParentMismatch",
            Error::NotContained => "NotContained",
            Error::NotIntegralProper => "NotIntegralProper",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::DegenerateDvr => "DegenerateDVR",
            Error::NotOversemigroup => "NotOversemigroup",
            Error::BoundTooLarge { .. } => "BoundTooLarge",
            Error::WindowTooLarge { .. } => "WindowTooLarge",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
