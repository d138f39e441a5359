//! `W(2,3)` characters at `c = -10`: the modules `T_{λ,0}` and the vacuum
//! sectors of the `A_2` lattice-type algebras built from them.

use num_rational::Rational64;

use crate::lie_a2::{self, Weight, RHO};
use crate::qseries::{inverse_euler_squared, Coefficient, Exponent, Series};

use super::parafermion::{ch_n_2s_theta, lift};

/// Level shift `κ = k + 3` at `k = -5/2`.
const KAPPA: (i64, i64) = (1, 2);

/// `h_{m,n} = ⅔(m²+n²+mn) + m + n` as an exact exponent.
pub fn conformal_weight(m: u32, n: u32) -> Exponent {
    let (m, n) = (i64::from(m), i64::from(n));
    Exponent::from_scaled(4 * (m * m + n * n + m * n) + 6 * (m + n))
}

/// `q^{h_{m,n}} (1-q^{m+1})(1-q^{n+1})(1-q^{m+n+2})`, the product numerator
/// of `ch T_{mω_1+nω_2}` before dividing by `(q;q)_∞²`.
pub fn t_numerator<C: Coefficient>(m: u32, n: u32, order: Exponent) -> Series<C> {
    let (a, b) = (i64::from(m), i64::from(n));
    let factors = Series::polynomial([(0, 1), (a + 1, -1)], order)
        * Series::polynomial([(0, 1), (b + 1, -1)], order)
        * Series::polynomial([(0, 1), (a + b + 2, -1)], order);
    factors.shift(conformal_weight(m, n)).truncate(order)
}

/// Product form of `ch T_{mω_1+nω_2}`.
pub fn ch_t_product<C: Coefficient>(m: u32, n: u32, order: Exponent) -> Series<C> {
    &t_numerator::<C>(m, n, order) * &inverse_euler_squared::<C>(order)
}

/// Weyl-sum form `q^{Δ} Σ_w ε(w) q^{-<w(λ+ρ),ρ>} / (q;q)_∞²` with
/// `Δ = (λ, λ+2ρ)/(2κ) + (ρ,ρ)` at `κ = 1/2`.
pub fn ch_t_weylsum<C: Coefficient>(m: u32, n: u32, order: Exponent) -> Series<C> {
    let lambda = Weight::new(m, n).coords();
    let kappa = Rational64::new(KAPPA.0, KAPPA.1);
    let shifted = (lambda.0 + RHO.0, lambda.1 + RHO.1);
    let two_rho = (2 * RHO.0, 2 * RHO.1);
    let lambda_plus_two_rho = (lambda.0 + two_rho.0, lambda.1 + two_rho.1);
    let delta =
        lie_a2::pairing(lambda, lambda_plus_two_rho) / (kappa * 2) + lie_a2::pairing(RHO, RHO);
    let mut numerator = Series::zero(order);
    for w in lie_a2::weyl_group() {
        let e = delta - lie_a2::pairing(w.apply(shifted), RHO);
        let e = Exponent::from_rational(&e).expect("Weyl-sum exponents lie in (1/3)Z");
        numerator = &numerator + &Series::from_terms([(e, C::from_int(w.sign()))], order);
    }
    &numerator * &inverse_euler_squared::<C>(order)
}

/// Visits every dominant `(m, n)` with `h_{m,n} < order`.
///
/// `h` is increasing in each of `m` and `n`, so each row stops at the first
/// weight past `order` and the rows stop once `h_{m,0} >= order`.
pub fn for_each_weight_below(order: Exponent, mut f: impl FnMut(u32, u32)) {
    for m in 0u32.. {
        if conformal_weight(m, 0) >= order {
            break;
        }
        for n in 0u32.. {
            if conformal_weight(m, n) >= order {
                break;
            }
            f(m, n);
        }
    }
}

/// `Σ_{m≡n (3)} min(m+1, n+1) ch T_{mω_1+nω_2}`.
pub fn ch_w0_bkmz<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut numerator = Series::zero(order);
    for_each_weight_below(order, |m, n| {
        if m % 3 == n % 3 {
            let mult = C::from_int(i64::from(m.min(n) + 1));
            numerator = &numerator + &t_numerator::<C>(m, n, order).scale(&mult);
        }
    });
    &numerator * &inverse_euler_squared::<C>(order)
}

/// Signed double sum
/// `Σ_{n_1≥0, n_2∈Z} sgn(n_2) (-1)^{n_1} q^{n_1(n_1+1)/2 + n_1 n_2 + 2n_2² + 2n_2} / (q;q)_∞²`
/// with `sgn(n) = 1` for `n >= 0` and `-1` otherwise.
pub fn ch_w0_sgn<C: Coefficient>(order: Exponent) -> Series<C> {
    let exponent = |a: i64, b: i64| a * (a + 1) / 2 + a * b + 2 * b * b + 2 * b;
    let below = |e: i64| Exponent::from_int(e) < order;
    let mut numerator = Series::zero(order);
    let mut add = |a: i64, b: i64| {
        let sign = if b >= 0 { 1 } else { -1 } * if a % 2 == 0 { 1 } else { -1 };
        numerator.add_term(Exponent::from_int(exponent(a, b)), C::from_int(sign));
    };
    // n_2 = k >= 0: the exponent is 2k² + 2k plus a term increasing in n_1.
    for k in 0i64.. {
        if !below(2 * k * k + 2 * k) {
            break;
        }
        for a in 0i64.. {
            if !below(exponent(a, k)) {
                break;
            }
            add(a, k);
        }
    }
    // n_2 = -k < 0: in n_1 the exponent is a parabola with integer minimum
    // 3k(k-1)/2 at n_1 ∈ {k-1, k}; it increases for n_1 >= k.
    for k in 1i64.. {
        if !below(3 * k * (k - 1) / 2) {
            break;
        }
        for a in 0i64.. {
            let e = exponent(a, -k);
            if a >= k && !below(e) {
                break;
            }
            if below(e) {
                add(a, -k);
            }
        }
    }
    &numerator * &inverse_euler_squared::<C>(order)
}

/// `Σ_{s≥0} ch N(2s)`, each summand in false-theta form; `ch N(2s)` starts
/// at `q^{2s(s+1)}`.
pub fn ch_w0_branch<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut out = Series::zero(order);
    for s in 0u32.. {
        if lift(s) >= order {
            break;
        }
        out = &out + &ch_n_2s_theta::<C>(s, order);
    }
    out
}

/// `Σ_{m≡n (3)} dim V(mω_1+nω_2) · ch T_{mω_1+nω_2}`.
pub fn ch_w2_full<C: Coefficient>(order: Exponent) -> Series<C> {
    let mut numerator = Series::zero(order);
    for_each_weight_below(order, |m, n| {
        if m % 3 == n % 3 {
            let dim = lie_a2::dim(Weight::new(m, n));
            let dim = C::from_u64(dim).expect("dimension fits the coefficient ring");
            numerator = &numerator + &t_numerator::<C>(m, n, order).scale(&dim);
        }
    });
    &numerator * &inverse_euler_squared::<C>(order)
}
