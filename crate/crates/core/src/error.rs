use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("division failed: {0}")]
    Division(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undeclared variable {name:?} at {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree cap exhausted at {cap} (required {required})")]
    CapExhausted { cap: usize, required: String },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
