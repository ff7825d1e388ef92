//! Error types shared across the library.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entries come from different fields: {0} vs {1}")]
    MixedField(String, String),
    #[error("modulus {0} is not an odd prime below 2^31")]
    BadModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("minor size {r} out of range for {rows}x{cols} matrix")]
    MinorOutOfRange { r: usize, rows: usize, cols: usize },
    #[error("zero vector cannot represent a projective point")]
    ZeroVector,
    #[error("empty input")]
    EmptyInput,
    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),
    #[error("points must be pairwise distinct")]
    CoincidentPoints,
    #[error("configuration is degenerate: {0}")]
    Degenerate(String),
    #[error("point does not lie on the scroll")]
    NotOnScroll,
    #[error("no fiber parameter in the base field (residual degree {0})")]
    NoFieldFiber(usize),
    #[error("fiber parameter is not unique ({0} candidates)")]
    AmbiguousFiber(usize),
    #[error("invalid scroll type: {0}")]
    InvalidScrollType(String),
    #[error("directrix spans are not complementary")]
    NonComplementarySpans,
    #[error("operation requires degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("plane index t={t} out of range 1..={max}")]
    TOutOfRange { t: usize, max: usize },
    #[error("operation requires a prime field")]
    RequiresPrimeField,
    #[error("invalid task parameters: {0}")]
    InvalidTask(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resampling budget exhausted at {site} after {attempts} attempts: {detail}")]
    RetryExhausted {
        site: &'static str,
        attempts: usize,
        detail: String,
    },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
