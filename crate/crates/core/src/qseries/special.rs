use super::{Coefficient, Exponent, Series};

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// `(q;q)_n = ∏_{i=1}^{n} (1 - q^i)`.
///
/// For `Length::Infinite` the product stops at the first factor with
/// `i >= order`: every later factor is `1 + O(q^order)`.
pub fn pochhammer_q<C: Coefficient>(n: Length, order: Exponent) -> Series<C> {
    let limit = order.ceil_int().max(0) as u64;
    let factors = match n {
        Length::Finite(n) => n.min(limit),
        Length::Infinite => limit,
    };
    let mut acc = Series::one(order);
    for i in 1..=factors as i64 {
        let factor = Series::polynomial([(0, 1), (i, -1)], order);
        acc = &acc * &factor;
    }
    acc
}

/// `[1/(q;q)_0, ..., 1/(q;q)_{n_max}]`, each obtained from the previous one
/// by multiplying with the geometric series `1/(1 - q^k)`.
pub fn inverse_pochhammer_table<C: Coefficient>(n_max: u64, order: Exponent) -> Vec<Series<C>> {
    let mut table = vec![Series::one(order)];
    let limit = order.ceil_int();
    for k in 1..=n_max as i64 {
        let geometric = Series::polynomial(
            (0..).take_while(|i| k * i < limit).map(|i| (k * i, 1)),
            order,
        );
        let next = table.last().expect("starts non-empty") * &geometric;
        table.push(next);
    }
    table
}

/// `1/(q;q)_∞^2`, the two-boson denominator shared by every character.
pub fn inverse_euler_squared<C: Coefficient>(order: Exponent) -> Series<C> {
    pochhammer_q::<C>(Length::Infinite, order)
        .pow(2)
        .invert()
        .expect("(q;q)_inf^2 has constant term 1")
}

/// Unary false theta function `Φ_m = Σ_{r≥0} (-1)^r q^{r(r+1)/2 + m r}`
/// for `m <= 0`, extended by `Φ_m = Φ_{-m}`.
pub fn false_theta<C: Coefficient>(m: i64, order: Exponent) -> Series<C> {
    let m = -m.abs();
    let mut out = Series::zero(order);
    // The exponent r(r+1)/2 + m r is increasing once r >= -m, so after that
    // point the first term past `order` ends the sum.
    let mut r: i64 = 0;
    loop {
        let e = Exponent::from_int(r * (r + 1) / 2 + m * r);
        if r >= -m && e >= order {
            break;
        }
        let sign = if r % 2 == 0 { 1 } else { -1 };
        out.add_term(e, C::from_int(sign));
        r += 1;
    }
    out
}
