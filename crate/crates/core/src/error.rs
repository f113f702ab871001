use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable set mismatch: [{0}] vs [{1}]")]
    VarSetMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` has no image")]
    UnassignedVariable(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {gen} out of range for {strands} strands")]
    GeneratorOutOfRange { gen: i64, strands: usize },
    #[error("closure has {0} components, a knot was required")]
    NotAKnot(usize),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("state {0} leaves the capped weight space")]
    CapViolation(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by malformed user input rather than computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::GeneratorOutOfRange { .. }
                | Error::NotAKnot(_)
                | Error::InvalidArgument(_)
                | Error::UnknownVariable(_)
                | Error::UnassignedVariable(_)
                | Error::VarSetMismatch(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
