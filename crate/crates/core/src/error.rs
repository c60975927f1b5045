use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("product factor exponent must be at least 1, got {0}")]
    NonPositiveFactor(i64),
    #[error("polynomial has a term with negative exponent {0}")]
    NegativeExponent(i64),
    #[error("q-shifted factorial length must be nonnegative, got {0}")]
    NegativeLength(i64),
    #[error("exponent {num}/{den} is not an integer at j = {j}")]
    NonIntegralExponent { j: i64, num: i64, den: i64 },
    #[error("({a}, {b}) is not a coprime pair with 1 <= b < a")]
    InvalidPair { a: i64, b: i64 },
    #[error("the pair (2,1) has only one continued-fraction representation")]
    NoAlternateRepresentation,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rational parameter has zero denominator")]
    ZeroDenominator,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parameter outside domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
