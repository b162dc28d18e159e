use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable sets differ: {left} vs {right}")]
    VarMismatch { left: String, right: String },
    #[error("invalid variable set: {0}")]
    InvalidVars(String),
    #[error("division is not exact: {0}")]
    NonExactDivision(String),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term must be {expected}")]
    BadConstantTerm { expected: &'static str },
    #[error("{0} is not divisible by {1} in this ring")]
    NonInvertibleInteger(String, i64),
    #[error("integrality violated: {0}")]
    Integrality(String),
    #[error("no square root declared for {0}")]
    MissingHalfRoot(String),
    #[error("cannot raise {0} to a negative power")]
    NotInvertible(String),
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),
    #[error("closed form mismatch: {0}")]
    ClosedFormMismatch(String),
    #[error("model is not proper: {0}")]
    NonProper(String),
    #[error("model mismatch")]
    ModelMismatch,
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("pole at y = 1: {0}")]
    Pole(String),
}
