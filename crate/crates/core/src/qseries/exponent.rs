use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};

/// Common denominator of every exponent: covers the thirds in conformal
/// weights and the halves of intermediate theta shifts.
pub const DENOMINATOR: i64 = 6;

/// A rational power of `q`, stored as an integer multiple of `1/DENOMINATOR`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(i64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(0);

    pub const fn from_int(n: i64) -> Self {
        Exponent(n * DENOMINATOR)
    }

    /// Builds an exponent from its value scaled by [`DENOMINATOR`].
    pub const fn from_scaled(scaled: i64) -> Self {
        Exponent(scaled)
    }

    pub fn from_ratio(numerator: i64, denominator: i64) -> Result<Self> {
        let unrepresentable = Error::UnrepresentableExponent {
            numerator,
            denominator,
        };
        if denominator == 0 {
            return Err(unrepresentable);
        }
        let scaled = numerator * DENOMINATOR;
        if scaled % denominator != 0 {
            return Err(unrepresentable);
        }
        Ok(Exponent(scaled / denominator))
    }

    pub fn from_rational(r: &Rational64) -> Result<Self> {
        Self::from_ratio(*r.numer(), *r.denom())
    }

    pub const fn scaled(self) -> i64 {
        self.0
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, DENOMINATOR)
    }

    pub fn is_integer(self) -> bool {
        self.0 % DENOMINATOR == 0
    }

    /// Smallest integer `n` with `n >= self`.
    pub fn ceil_int(self) -> i64 {
        Integer::div_ceil(&self.0, &DENOMINATOR)
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent::from_int(n)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl AddAssign for Exponent {
    fn add_assign(&mut self, rhs: Exponent) {
        self.0 += rhs.0;
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl Mul<i64> for Exponent {
    type Output = Exponent;
    fn mul(self, rhs: i64) -> Exponent {
        Exponent(self.0 * rhs)
    }
}

/// Lowest terms, always with an explicit denominator: `4/1`, `-5/3`.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}
