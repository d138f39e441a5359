use thiserror::Error;

use crate::qseries::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot place a term at q^{exponent} in a series truncated at O(q^{order})")]
    InvalidConstruction { exponent: Exponent, order: Exponent },
    #[error("coefficient of q^{exponent} is unknown: series is only known below O(q^{order})")]
    OutOfRange { exponent: Exponent, order: Exponent },
    #[error("series is not invertible: lowest term must be a unit constant")]
    NotInvertible,
    #[error(
        "exponent {numerator}/{denominator} is not a multiple of 1/{}",
        crate::qseries::DENOMINATOR
    )]
    UnrepresentableExponent { numerator: i64, denominator: i64 },
    #[error("central charge has a pole at k = -3")]
    Pole,
    #[error("parameter p must be at least 1")]
    InvalidParameter,
    #[error("Weyl numerator is not divisible by the Weyl denominator")]
    InexactDivision,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("order must be at least 1 (got {0})")]
    InvalidOrder(Exponent),
}

pub type Result<T> = std::result::Result<T, Error>;
