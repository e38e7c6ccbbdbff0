use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("index {index} out of range for {what}")]
    OutOfRange { what: &'static str, index: usize },
    #[error("partition {0} does not fit in a {1}x{2} box")]
    BoxViolation(String, usize, usize),
    #[error("partition {0} has more than {1} parts")]
    TooManyParts(String, usize),
    #[error("polynomial is not odd symmetric")]
    NotSymmetric,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("degree bound {0} too small to certify the quotient")]
    Incomplete(usize),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
