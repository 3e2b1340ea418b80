use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("non-integral coefficient produced by Newton recursion (internal error)")]
    IntegralityViolated,
    #[error("exponent vector has degree {found}, expected {expected}")]
    BadDegree { expected: u32, found: u32 },
    #[error("coefficient matrix of elementary symmetric functions is singular")]
    SingularM,
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("zero form")]
    ZeroForm,
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("relation set not supported by the normal-form reducer: {0}")]
    RelationReductionUnsupported(String),
    #[error("negative homology dimension (internal error): {0}")]
    NegativeHomology(String),
    #[error("no polynomial of degree <= {bound} fits the tail of the table")]
    NoStabilization { bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
