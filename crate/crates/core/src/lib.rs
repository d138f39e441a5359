pub mod bivar;
pub mod characters;
pub mod cli;
pub mod error;
pub mod lie_a2;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use qseries::{Exponent, Series};

/// Exact series with arbitrary-precision integer coefficients.
pub type QSeries = Series<num_bigint::BigInt>;
/// Bivariate series with arbitrary-precision integer coefficients.
pub type BivarSeries = bivar::BivarSeries<num_bigint::BigInt>;
/// Exact rational scalar used for conformal data and mismatch values.
pub type Rational = num_rational::BigRational;
