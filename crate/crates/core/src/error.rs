use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible over the prime field")]
    ReducibleModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("no assignment given for variable `{0}`")]
    MissingAssignment(String),
    #[error("operands are defined over different fields")]
    FieldMismatch,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("ideal is not zero-dimensional: no pure power of `{0}` among the leading terms")]
    NotZeroDimensional(String),
    #[error("algebra is not local with nilpotent maximal ideal")]
    NotLocal,
    #[error("naive closure requires a finite field; over an infinite field it coincides with the true closure")]
    InfiniteFieldUnsupported,
    #[error("polynomial degree {degree} is smaller than m = {m}")]
    DegreeTooSmall { degree: usize, m: usize },
    #[error("divisibility certificate failed: {0}")]
    CertificateFailure(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("modular results disagree: {0}")]
    PrimeDisagreement(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
