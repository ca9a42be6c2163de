use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed fraction `{0}`")]
    MalformedFraction(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("element does not belong to the algebra: {0}")]
    ElementMismatch(String),
    #[error("operation `{op}` expects {expected} argument(s), got {got}")]
    ArityMismatch {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("element is not Boolean: {0}")]
    NotBoolean(String),
    #[error("not a partition of the spectrum: {0}")]
    NotPartition(String),
    #[error("algebra is not simple: {0}")]
    NotSimple(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("constant {0} is not in the algebra")]
    ConstantNotInAlgebra(String),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("map is not continuous: {0}")]
    NotContinuous(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
