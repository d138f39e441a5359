//! Laurent polynomials in `x` with truncated `q`-series coefficients,
//! expanded in the annulus `|q| < |x| < 1`.
//!
//! This is where constant terms `CT_x` and `x`-coefficient extraction of
//! affine `sl(2)` characters happen.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use crate::qseries::{inverse_pochhammer_table, Coefficient, Exponent, Series};

/// A finite Laurent polynomial `Σ c_k x^k` with scalar coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoly<C> {
    coeffs: BTreeMap<i64, C>,
}

impl<C: Coefficient> XPoly<C> {
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            let slot: &mut C = coeffs.entry(k).or_insert_with(C::zero);
            *slot += &c;
            if slot.is_zero() {
                coeffs.remove(&k);
            }
        }
        XPoly { coeffs }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> C {
        self.coeffs.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Which of `1/(xq;q)_∞` or `1/(x^{-1}q;q)_∞` to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XSign {
    Plus,
    Minus,
}

impl XSign {
    pub fn apply(self, k: i64) -> i64 {
        match self {
            XSign::Plus => k,
            XSign::Minus => -k,
        }
    }
}

/// `Σ_k f_k(q) x^k` with every `f_k` truncated at the shared `q_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivarSeries<C> {
    x_coeffs: BTreeMap<i64, Series<C>>,
    q_order: Exponent,
}

impl<C: Coefficient> BivarSeries<C> {
    pub fn zero(q_order: Exponent) -> Self {
        BivarSeries {
            x_coeffs: BTreeMap::new(),
            q_order,
        }
    }

    pub fn one(q_order: Exponent) -> Self {
        Self::from_coeffs([(0, Series::one(q_order))], q_order)
    }

    /// Builds from `(x-exponent, series)` pairs; each series is cut to `q_order`.
    pub fn from_coeffs<I>(coeffs: I, q_order: Exponent) -> Self
    where
        I: IntoIterator<Item = (i64, Series<C>)>,
    {
        let mut out = Self::zero(q_order);
        for (k, f) in coeffs {
            out.add_coeff(k, &f);
        }
        out
    }

    /// Embeds a scalar Laurent polynomial in `x` as a series.
    pub fn from_x_poly(p: &XPoly<C>, q_order: Exponent) -> Self {
        Self::from_coeffs(
            p.terms().map(|(k, c)| {
                (
                    k,
                    Series::from_terms([(Exponent::ZERO, c.clone())], q_order),
                )
            }),
            q_order,
        )
    }

    fn add_coeff(&mut self, k: i64, f: &Series<C>) {
        let q_order = self.q_order;
        let sum = match self.x_coeffs.get(&k) {
            Some(existing) => existing + f,
            None => f.truncate(q_order),
        };
        debug_assert!(
            sum.order() >= q_order,
            "coefficient known below q_order only"
        );
        let sum = sum.truncate(q_order);
        if sum.is_zero() {
            self.x_coeffs.remove(&k);
        } else {
            self.x_coeffs.insert(k, sum);
        }
    }

    pub fn q_order(&self) -> Exponent {
        self.q_order
    }

    pub fn x_support(&self) -> impl Iterator<Item = i64> + '_ {
        self.x_coeffs.keys().copied()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &Series<C>)> + '_ {
        self.x_coeffs.iter().map(|(k, f)| (*k, f))
    }

    /// Coefficient of `x^m` as a series in `q`.
    pub fn coeff_x(&self, m: i64) -> Series<C> {
        self.x_coeffs
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Series::zero(self.q_order))
    }

    /// `CT_x`, the `x^0` coefficient.
    pub fn constant_term(&self) -> Series<C> {
        self.coeff_x(0)
    }

    /// Largest `|k|` with a nonzero `x^k` coefficient.
    pub fn max_abs_x_degree(&self) -> Option<i64> {
        self.x_coeffs.keys().map(|k| k.abs()).max()
    }

    /// `coeff_x(m) == coeff_x(-m)` for all `m`.
    pub fn is_x_symmetric(&self) -> bool {
        self.x_coeffs
            .iter()
            .all(|(k, f)| self.x_coeffs.get(&-k).is_some_and(|g| g == f))
    }

    pub fn mul_by_x_poly(&self, p: &XPoly<C>) -> Self {
        let mut out = Self::zero(self.q_order);
        for (k, f) in &self.x_coeffs {
            for (j, c) in p.terms() {
                out.add_coeff(k + j, &f.scale(c));
            }
        }
        out
    }

    /// Multiplication by `q^shift`; the q-order moves with it.
    pub fn shift_q(&self, shift: Exponent) -> Self {
        BivarSeries {
            x_coeffs: self
                .x_coeffs
                .iter()
                .map(|(k, f)| (*k, f.shift(shift)))
                .collect(),
            q_order: self.q_order + shift,
        }
    }

    /// Restricts to the coefficients whose `q`-parts are known below `q_order`.
    pub fn truncate_q(&self, q_order: Exponent) -> Self {
        let q_order = q_order.min(self.q_order);
        Self::from_coeffs(
            self.x_coeffs.iter().map(|(k, f)| (*k, f.truncate(q_order))),
            q_order,
        )
    }
}

impl<C: Coefficient> Mul for &BivarSeries<C> {
    type Output = BivarSeries<C>;
    fn mul(self, rhs: &BivarSeries<C>) -> BivarSeries<C> {
        let q_order = self.q_order.min(rhs.q_order);
        let mut acc: BTreeMap<i64, Series<C>> = BTreeMap::new();
        for (i, f) in &self.x_coeffs {
            for (j, g) in &rhs.x_coeffs {
                let product = f * g;
                if product.is_zero() {
                    continue;
                }
                match acc.get_mut(&(i + j)) {
                    Some(slot) => *slot = &*slot + &product,
                    None => {
                        acc.insert(i + j, product);
                    }
                }
            }
        }
        BivarSeries::from_coeffs(acc, q_order)
    }
}

impl<C: Coefficient> Add for &BivarSeries<C> {
    type Output = BivarSeries<C>;
    fn add(self, rhs: &BivarSeries<C>) -> BivarSeries<C> {
        let mut out = self.truncate_q(rhs.q_order);
        for (k, g) in &rhs.x_coeffs {
            out.add_coeff(*k, g);
        }
        out
    }
}

impl<C: Coefficient> Mul for BivarSeries<C> {
    type Output = BivarSeries<C>;
    fn mul(self, rhs: BivarSeries<C>) -> BivarSeries<C> {
        &self * &rhs
    }
}

/// `mul_bivar` under its operation name.
pub fn mul_bivar<C: Coefficient>(a: &BivarSeries<C>, b: &BivarSeries<C>) -> BivarSeries<C> {
    a * b
}

/// Euler's expansion `1/(x^{±1}q;q)_∞ = Σ_{n≥0} x^{±n} q^n/(q)_n`.
///
/// The `n`-th term starts at `q^n`, so the sum stops at `n = order`.
pub fn euler_inv_pochhammer<C: Coefficient>(sign: XSign, order: Exponent) -> BivarSeries<C> {
    let mut out = BivarSeries::zero(order);
    let last = order.ceil_int().max(0);
    let inverse = inverse_pochhammer_table::<C>(last as u64, order);
    for n in 0..last {
        let term = inverse[n as usize]
            .shift(Exponent::from_int(n))
            .truncate(order);
        out.add_coeff(sign.apply(n), &term);
    }
    out
}

/// `1/(x^{±1}q;q)_∞` expanded factor by factor as `∏_{i≥1} Σ_k x^{±k} q^{ik}`.
///
/// Shares nothing with [`euler_inv_pochhammer`] beyond the ring operations.
pub fn inv_pochhammer_product<C: Coefficient>(sign: XSign, order: Exponent) -> BivarSeries<C> {
    let mut acc = BivarSeries::one(order);
    let last = order.ceil_int();
    for i in 1..last.max(1) {
        let factor = BivarSeries::from_coeffs(
            (0..)
                .take_while(|k| i * k < last)
                .map(|k| (sign.apply(k), Series::polynomial([(i * k, 1)], order))),
            order,
        );
        acc = &acc * &factor;
    }
    acc
}

/// `1/((xq;q)_∞ (x^{-1}q;q)_∞)`.
pub fn double_pochhammer_inverse<C: Coefficient>(order: Exponent) -> BivarSeries<C> {
    &euler_inv_pochhammer(XSign::Plus, order) * &euler_inv_pochhammer(XSign::Minus, order)
}

/// `x^{-s} + x^{-s+1} + ... + x^s`, the expanded quotient
/// `(x^{s+1/2} - x^{-s-1/2})/(x^{1/2} - x^{-1/2})`.
pub fn sl2_weight_poly<C: Coefficient>(s: u32) -> XPoly<C> {
    let s = i64::from(s);
    XPoly::from_terms((-s..=s).map(|k| (k, C::one())))
}

/// Character of the affine `sl(2)` module of highest weight `2sω_1` at
/// level `-3/2`: `sl2_weight_poly(s) q^{2s(s+1)} / ((xq;q)_∞ (x^{-1}q;q)_∞)`.
pub fn affine_sl2_char<C: Coefficient>(s: u32, order: Exponent) -> BivarSeries<C> {
    let lift = Exponent::from_int(2 * i64::from(s) * (i64::from(s) + 1));
    double_pochhammer_inverse::<C>(order - lift)
        .mul_by_x_poly(&sl2_weight_poly(s))
        .shift_q(lift)
}
