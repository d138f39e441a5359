use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, NumAssignRef, NumRef};

use super::Exponent;
use crate::error::{Error, Result};

/// Scalar ring for series coefficients.
///
/// Every formula in this crate has integer coefficients, so any commutative
/// ring with a map from `i64` works: `BigInt` for exact work, `i64`/`i128`
/// when overflow is ruled out, `BigRational` when dividing by constants.
pub trait Coefficient:
    NumRef
    + NumAssignRef
    + Neg<Output = Self>
    + FromPrimitive
    + Clone
    + fmt::Debug
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient ring contains the integers")
    }
}

impl<T> Coefficient for T where
    T: NumRef
        + NumAssignRef
        + Neg<Output = T>
        + FromPrimitive
        + Clone
        + fmt::Debug
        + Send
        + Sync
        + 'static
{
}

/// Truncated Laurent series `Σ c_e q^e + O(q^order)`.
///
/// Coefficients at exponents `>= order` are unknown rather than zero; the
/// map never stores a zero coefficient.
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    terms: BTreeMap<Exponent, C>,
    order: Exponent,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(order: Exponent) -> Self {
        Series {
            terms: BTreeMap::new(),
            order,
        }
    }

    /// `1 + O(q^order)`; empty when `order <= 0`.
    pub fn one(order: Exponent) -> Self {
        Self::from_terms([(Exponent::ZERO, C::one())], order)
    }

    pub fn monomial(exponent: Exponent, coefficient: C, order: Exponent) -> Result<Self> {
        if exponent >= order {
            return Err(Error::InvalidConstruction { exponent, order });
        }
        Ok(Self::from_terms([(exponent, coefficient)], order))
    }

    /// Sums repeated exponents, dropping zeros and anything at or above `order`.
    pub fn from_terms<I>(terms: I, order: Exponent) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut out = Self::zero(order);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Finite polynomial `Σ c_i q^i` from integer-exponent pairs.
    pub fn polynomial<I>(terms: I, order: Exponent) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Exponent::from_int(e), C::from_int(c))),
            order,
        )
    }

    pub(crate) fn add_term(&mut self, exponent: Exponent, coefficient: C) {
        if exponent >= self.order || coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(C::zero);
        *slot += &coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn order(&self) -> Exponent {
        self.order
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exponent: Exponent) -> Result<C> {
        if exponent >= self.order {
            return Err(Error::OutOfRange {
                exponent,
                order: self.order,
            });
        }
        Ok(self.terms.get(&exponent).cloned().unwrap_or_else(C::zero))
    }

    /// Drops every term at or above `new_order`. Never raises the order.
    pub fn truncate(&self, new_order: Exponent) -> Self {
        let order = new_order.min(self.order);
        Series {
            terms: self
                .terms
                .range(..order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            order,
        }
    }

    /// Exact multiplication by `q^shift`; the truncation order moves with it.
    pub fn shift(&self, shift: Exponent) -> Self {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + shift, c.clone()))
                .collect(),
            order: self.order + shift,
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero(self.order);
        }
        Series {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * factor))
                .collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse of a series whose lowest term is `±1`.
    pub fn invert(&self) -> Result<Self> {
        // Nothing is known at q^0 or above, so any unit is consistent.
        if self.order <= Exponent::ZERO && self.terms.is_empty() {
            return Ok(Series::zero(self.order));
        }
        let (&lowest, unit) = self.terms.iter().next().ok_or(Error::NotInvertible)?;
        let minus_one = -C::one();
        if lowest != Exponent::ZERO || !(unit.is_one() || *unit == minus_one) {
            return Err(Error::NotInvertible);
        }
        let unit = unit.clone();
        // Exponents of the inverse lie in the monoid generated by the
        // exponents of `self`, so stepping by their gcd visits all of them.
        let step = self
            .terms
            .keys()
            .fold(0i64, |g, e| num_integer::gcd(g, e.scaled()))
            .max(1);
        let mut inverse: BTreeMap<Exponent, C> = BTreeMap::new();
        let mut e = Exponent::ZERO;
        while e < self.order {
            let mut acc = if e == Exponent::ZERO {
                C::one()
            } else {
                C::zero()
            };
            if e > Exponent::ZERO {
                for (ea, ca) in self.terms.range(Exponent::from_scaled(1)..=e) {
                    if let Some(cb) = inverse.get(&(e - *ea)) {
                        acc -= ca.clone() * cb;
                    }
                }
            }
            if !acc.is_zero() {
                inverse.insert(e, acc * &unit);
            }
            e += Exponent::from_scaled(step);
        }
        Ok(Series {
            terms: inverse,
            order: self.order,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.order);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Returns `true` if every stored coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool
    where
        C: PartialOrd,
    {
        self.terms.values().all(|c| *c >= C::zero())
    }

    /// Converts coefficients into another ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), self.order)
    }
}

impl<C: Coefficient> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (e, c) in rhs.terms.range(..order) {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (e, c) in rhs.terms.range(..order) {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        // A negative lowest exponent in one factor pulls unknown terms of the
        // other below its order, so the product's order drops by that much.
        let dip = |s: &Series<C>| {
            s.valuation()
                .map_or(Exponent::ZERO, |v| v.min(Exponent::ZERO))
        };
        let order = (self.order + dip(rhs)).min(rhs.order + dip(self));
        let mut out = Series::zero(order);
        for (ea, ca) in &self.terms {
            let limit = order - *ea;
            for (eb, cb) in rhs.terms.range(..limit) {
                out.add_term(*ea + *eb, ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coefficient> $tr for Series<C> {
            type Output = Series<C>;
            fn $m(self, rhs: Series<C>) -> Series<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Series<C>> for Series<C> {
            type Output = Series<C>;
            fn $m(self, rhs: &Series<C>) -> Series<C> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coefficient> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        -&self
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})q^{e:?}")?;
        }
        if !self.terms.is_empty() {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{:?})", self.order)
    }
}

impl<C: fmt::Debug> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("terms", &self.terms)
            .field("order", &self.order)
            .finish()
    }
}
