use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("pole at t = 1: {0}")]
    PoleAtOne(String),

    #[error("partition {partition:?} exceeds truncation order {pbound}")]
    BeyondTruncation { partition: Vec<u32>, pbound: usize },

    #[error("plethysm requires the inner series to have zero constant term")]
    NonzeroConstantTerm,

    #[error("plethystic inverse requires an invertible linear term c*p1")]
    DegenerateLinearTerm,

    #[error("character is not an integer polynomial in t: {0}")]
    NonIntegral(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no extended index satisfies the degree cap: {0}")]
    InconsistentReconstruction(String),

    #[error("ambient dimension {ambient} exceeds the configured cap {cap}")]
    ResourceCap { ambient: u128, cap: usize },

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
