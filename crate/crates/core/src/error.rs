use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus polynomial is reducible (or not monic of the requested degree)")]
    ReducibleModulus,
    #[error("modulus degree does not match the requested extension degree")]
    DegreeMismatch,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimensions do not match")]
    DimensionMismatch,
    #[error("enumeration would visit {needed} objects, limit is {limit}")]
    EnumerationLimitExceeded { needed: u128, limit: u128 },
    #[error("q must be at least 2, got {0}")]
    InvalidQ(u64),
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),
    #[error("Solomon-Stiffler spec invariant violated: {0}")]
    SpecInvariantViolation(String),
    #[error("generator matrix is rank deficient")]
    RankDeficient,
    #[error("exponent {exp} is not divisible by {divisor}")]
    NonDivisibleExponent { exp: usize, divisor: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
