use thiserror::Error;

use crate::sequences::FamilyTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds the supported bound {max}")]
    IndexTooLarge { index: u64, max: u64 },

    #[error("parameter k must be at least 1")]
    ZeroK,

    #[error("{name} = {value} is below the minimum {min}")]
    BelowMinimum {
        name: &'static str,
        value: u64,
        min: u64,
    },

    #[error("offset a = {a} is outside [0, k] for k = {k}")]
    OffsetOutOfRange { a: u64, k: u64 },

    #[error("m = {m} exceeds n = {n}; index n - m would be negative")]
    CatalanOrder { n: u64, m: u64 },

    #[error("two-index identity requires n + m > 1, got n = {n}, m = {m}")]
    TwoIndexRange { n: u64, m: u64 },

    #[error("negative power-of-two exponent {0}")]
    NegativeExponent(i64),

    #[error("series denominator has a constant term with no dyadic inverse")]
    NonInvertibleConstant,

    #[error("{operation} is not defined for family {family}")]
    UnsupportedFamily {
        family: FamilyTag,
        operation: &'static str,
    },

    #[error("sample point has 9x^2 - 8 <= 0; roots are not real and distinct")]
    DegenerateDiscriminant,

    #[error("sample point must be real")]
    NonRealSample,

    #[error("tolerance must be a positive finite number")]
    InvalidTolerance,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
