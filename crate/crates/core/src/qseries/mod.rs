//! Exact truncated Laurent series in a single variable `q`.
//!
//! Exponents are rationals with the fixed denominator [`DENOMINATOR`];
//! coefficients live in any [`Coefficient`] ring.

mod exponent;
mod series;
mod special;

pub use exponent::{Exponent, DENOMINATOR};
pub use series::{Coefficient, Series};
pub use special::{
    false_theta, inverse_euler_squared, inverse_pochhammer_table, pochhammer_q, Length,
};
