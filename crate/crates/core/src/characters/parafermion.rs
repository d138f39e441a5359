//! Characters of the `sl(2)` parafermion algebra at level `-3/2` and of its
//! modules `N(2s)`, each through several independent formulas.
//!
//! Every sum below has term exponents bounded below by a quadratic in the
//! summation index; the stopping rule for each is stated where it is used.

use crate::bivar::{self, BivarSeries, XSign};
use crate::qseries::{
    false_theta, inverse_euler_squared, inverse_pochhammer_table, Coefficient, Exponent, Series,
};

use super::w3::t_numerator;

/// `q^a` lift of the module `N(2s)`: `a = 2s(s+1)`.
pub fn lift(s: u32) -> Exponent {
    let s = i64::from(s);
    Exponent::from_int(2 * s * (s + 1))
}

/// `CT_x 1/((xq;q)_∞ (x^{-1}q;q)_∞)`.
pub fn ch_n_sl2_ct<C: Coefficient>(order: Exponent) -> Series<C> {
    bivar::double_pochhammer_inverse::<C>(order).constant_term()
}

/// `(Φ_0 - Φ_{-1}) / (q;q)_∞²`.
pub fn ch_n_sl2_theta<C: Coefficient>(order: Exponent) -> Series<C> {
    let numerator = &false_theta::<C>(0, order) - &false_theta::<C>(-1, order);
    &numerator * &inverse_euler_squared::<C>(order)
}

/// `Σ_{m≥1} q^{2m(m-1)} (1-q^m)² (1-q^{2m}) / (q;q)_∞²`.
pub fn ch_n_sl2_lemma21<C: Coefficient>(order: Exponent) -> Series<C> {
    &lemma21_numerator::<C>(order) * &inverse_euler_squared::<C>(order)
}

fn lemma21_numerator<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut numerator = Series::zero(order);
    // Each summand starts at q^{2m(m-1)}, increasing in m.
    for m in 1i64.. {
        let lead = 2 * m * (m - 1);
        if Exponent::from_int(lead) >= order {
            break;
        }
        let term = Series::polynomial(
            [
                (lead, 1),
                (lead + m, -2),
                (lead + 3 * m, 2),
                (lead + 4 * m, -1),
            ],
            order,
        );
        numerator = &numerator + &term;
    }
    numerator
}

/// `Σ_{n≥0} q^{2n} / (q)_n²`.
pub fn ch_n_sl2_qhyp<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    // The n-th term starts at q^{2n}.
    let terms = (order.ceil_int().max(0) + 1) / 2;
    let inverse = inverse_pochhammer_table::<C>(terms as u64, order);
    for n in 0..terms {
        let term = (&inverse[n as usize] * &inverse[n as usize]).shift(Exponent::from_int(2 * n));
        out = &out + &term.truncate(order);
    }
    out
}

/// `Σ_{m≥0} ch T_{mω_1+mω_2}`: one `W(2,3)` module at each `h = 2m(m+1)`.
pub fn ch_n_sl2_dec<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut numerator = Series::zero(order);
    for m in 0u32.. {
        if lift(m) >= order {
            break;
        }
        numerator = &numerator + &t_numerator::<C>(m, m, order);
    }
    &numerator * &inverse_euler_squared::<C>(order)
}

/// `q^{2s(s+1)} CT_x (x^{-s} + ... + x^s) / ((xq;q)_∞ (x^{-1}q;q)_∞)`.
pub fn ch_n_2s_ct<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    let inner_order = order - lift(s);
    let string = BivarSeries::from_x_poly(&bivar::sl2_weight_poly::<C>(s), inner_order);
    let product = bivar::mul_bivar(&bivar::double_pochhammer_inverse::<C>(inner_order), &string);
    product.constant_term().shift(lift(s))
}

/// `q^{2s(s+1)} (Φ_0 + Φ_{-1} - 2Φ_{-s-1}) / (q;q)_∞²`.
pub fn ch_n_2s_theta<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    let inner_order = order - lift(s);
    (&n_2s_theta_numerator::<C>(s, inner_order) * &inverse_euler_squared::<C>(inner_order))
        .shift(lift(s))
}

fn n_2s_theta_numerator<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    let s = i64::from(s);
    let pair = &false_theta::<C>(0, order) + &false_theta::<C>(-1, order);
    &pair - &false_theta::<C>(-s - 1, order).scale(&C::from_int(2))
}

/// `(q;q)_∞² ch N(2s)` in false-theta form, with no denominator at all.
pub fn n_2s_theta_numerator_lifted<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    n_2s_theta_numerator::<C>(s, order - lift(s)).shift(lift(s))
}

/// `CT_x (x^{-s}+...+x^s)/((xq)_∞(x^{-1}q)_∞)` without the bivariate ring:
/// the `x^j` coefficient of the double Euler sum is
/// `Σ_{n≥0} q^{2n+|j|} / ((q)_n (q)_{n+|j|})`.
pub fn ct_string_hypergeometric<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    let s = i64::from(s);
    let limit = order.ceil_int().max(0);
    let inverse = inverse_pochhammer_table::<C>(limit as u64, order);
    for j in -s..=s {
        let j = j.abs();
        // Terms start at q^{2n+j}, increasing in n.
        for n in 0i64.. {
            let lead = 2 * n + j;
            if lead >= limit {
                break;
            }
            let term = &inverse[n as usize] * &inverse[(n + j) as usize];
            out = &out + &term.shift(Exponent::from_int(lead)).truncate(order);
        }
    }
    out
}

/// `CT_x` of the string `x^{-s}..x^s` times the double Pochhammer inverse.
pub fn ct_string_bivar<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    bivar::double_pochhammer_inverse::<C>(order)
        .mul_by_x_poly(&bivar::sl2_weight_poly::<C>(s))
        .constant_term()
}

/// The `x^m` coefficient of `1/((xq)_∞(x^{-1}q)_∞)` in false-theta form:
/// `(Φ_{-|m|} - Φ_{-|m|-1}) / (q;q)_∞²`.
pub fn coeff_x_theta<C: Coefficient>(m: i64, order: Exponent) -> Series<C> {
    let m = m.abs();
    let numerator = &false_theta::<C>(-m, order) - &false_theta::<C>(-m - 1, order);
    &numerator * &inverse_euler_squared::<C>(order)
}

/// Direct `x^m` coefficient of the double Pochhammer inverse.
pub fn coeff_x_bivar<C: Coefficient>(m: i64, order: Exponent) -> Series<C> {
    let plus = bivar::euler_inv_pochhammer::<C>(XSign::Plus, order);
    let minus = bivar::euler_inv_pochhammer::<C>(XSign::Minus, order);
    bivar::mul_bivar(&plus, &minus).coeff_x(m)
}

/// `F_{m,n} = q^{⅔(m²+n²+mn) - m - n} (1-q^m)(1-q^n)(1-q^{m+n})` for `m, n >= 1`.
pub fn f_poly<C: Coefficient>(m: u32, n: u32, order: Exponent) -> Series<C> {
    assert!(m >= 1 && n >= 1, "F_{{m,n}} needs m, n >= 1");
    let lead = f_lead(m, n);
    let (m, n) = (i64::from(m), i64::from(n));
    let factors = Series::polynomial([(0, 1), (m, -1)], order)
        * Series::polynomial([(0, 1), (n, -1)], order)
        * Series::polynomial([(0, 1), (m + n, -1)], order);
    factors.shift(lead).truncate(order)
}

/// Lowest exponent of `F_{m,n}`; increasing in each argument for `m, n >= 1`.
pub fn f_lead(m: u32, n: u32) -> Exponent {
    let (m, n) = (i64::from(m), i64::from(n));
    Exponent::from_scaled(4 * (m * m + n * n + m * n) - 6 * (m + n))
}

/// `G_s = Σ_{m≥s+1} F_{m,m} + Σ_{1≤i≤s, m≥i} (F_{m,m+3(s+1-i)} + F_{m+3(s+1-i),m})`.
pub fn g_s<C: Coefficient>(s: u32, order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    for m in (s + 1).. {
        if f_lead(m, m) >= order {
            break;
        }
        out = &out + &f_poly::<C>(m, m, order);
    }
    for i in 1..=s {
        let gap = 3 * (s + 1 - i);
        for m in i.. {
            if f_lead(m, m + gap) >= order {
                break;
            }
            out = &out + &f_poly::<C>(m, m + gap, order);
            out = &out + &f_poly::<C>(m + gap, m, order);
        }
    }
    out
}

/// `Σ_{s≥0} G_s`.
///
/// Every term of `G_s` sits at or above `q^{2s(s+1)}`: with `t = s+1` and
/// `j = s+1-i`, the smallest exponent in the `j`-th family is
/// `2t(t-1) + j(2t+2j-1)`, so the sum over `s` stops once `2s(s+1) >= order`.
pub fn g_total<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    for s in 0u32.. {
        if lift(s) >= order {
            break;
        }
        out = &out + &g_s::<C>(s, order);
    }
    out
}

/// `Σ_{m,n≥1, m≡n (3)} min(m,n) F_{m,n}`.
pub fn min_weighted_f_sum<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    for m in 1u32.. {
        if f_lead(m, 1) >= order {
            break;
        }
        for n in 1u32.. {
            if f_lead(m, n) >= order {
                break;
            }
            if m % 3 == n % 3 {
                let weight = C::from_int(i64::from(m.min(n)));
                out = &out + &f_poly::<C>(m, n, order).scale(&weight);
            }
        }
    }
    out
}
