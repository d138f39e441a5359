//! Central charges, `W(2,3)` structure constants and highest weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `c_p = 2 - 24 (p-1)^2 / p`.
pub fn central_charge_p(p: u32) -> Result<BigRational> {
    if p == 0 {
        return Err(Error::InvalidParameter);
    }
    let p = i64::from(p);
    Ok(rat(2) - frac(24 * (p - 1) * (p - 1), p))
}

/// `c_k = 2 - 24 (k+2)^2 / (k+3)` for the principal W-algebra of `sl(3)` at level `k`.
pub fn central_charge_k(k: &BigRational) -> Result<BigRational> {
    let denominator = k + rat(3);
    if denominator.is_zero() {
        return Err(Error::Pole);
    }
    let shifted = k + rat(2);
    Ok(rat(2) - rat(24) * &shifted * &shifted / denominator)
}

/// Coefficients in `[W(m), W(n)]`.
///
/// `central` multiplies `δ_{m+n,0}` and is reported whether or not `m + n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketCoefficients {
    pub central: BigRational,
    pub lambda_coeff: BigRational,
    pub l_coeff: BigRational,
}

pub fn w23_bracket_coeffs(c: &BigRational, m: i64, n: i64) -> BracketCoefficients {
    let anomaly = rat(22) + rat(5) * c;
    let central = &anomaly * c / rat(48 * 3 * 120) * rat((m * m - 4) * (m * m - 1) * m);
    let lambda_coeff = frac(m - n, 3);
    let l_coeff = &anomaly * rat(m - n) / rat(48 * 30) * rat(2 * m * m - m * n + 2 * n * n - 8);
    BracketCoefficients {
        central,
        lambda_coeff,
        l_coeff,
    }
}

/// `(L(0), W(0))` eigenvalues on the highest weight vector `v_{m,n}`.
///
/// `beta` uses the lattice normalization of `w_3`; the bracket
/// normalization at `c = -10` is reached by rescaling `w_3` by `4√2/27`,
/// which is left unapplied so that `beta` stays rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightData {
    pub p: u32,
    pub central_charge: BigRational,
    pub h: BigRational,
    pub beta: BigRational,
}

/// General-`p` highest weights:
/// `h = (p/3)(m²+n²+mn) + (p-1)(m+n)` and
/// `β = (m-n)(-3+3p+2mp+np)(-3+3p+mp+2np) / (2p²)`.
pub fn highest_weight(p: u32, m: u32, n: u32) -> Result<HighestWeightData> {
    let central_charge = central_charge_p(p)?;
    let (p, m, n) = (i64::from(p), i64::from(m), i64::from(n));
    let h = frac(p * (m * m + n * n + m * n), 3) + rat((p - 1) * (m + n));
    let beta = frac(
        (m - n) * (-3 + 3 * p + 2 * m * p + n * p) * (-3 + 3 * p + m * p + 2 * n * p),
        2 * p * p,
    );
    Ok(HighestWeightData {
        p: p as u32,
        central_charge,
        h,
        beta,
    })
}

/// Closed forms at `p = 2`:
/// `h = ⅔m² + ⅔n² + ⅔mn + m + n`, `β = (m-n)(3+4m+2n)(3+2m+4n)/8`.
pub fn highest_weight_p2(m: u32, n: u32) -> HighestWeightData {
    let (m, n) = (i64::from(m), i64::from(n));
    let h = frac(2 * m * m + 2 * n * n + 2 * m * n, 3) + rat(m + n);
    let beta = frac((m - n) * (3 + 4 * m + 2 * n) * (3 + 2 * m + 4 * n), 8);
    HighestWeightData {
        p: 2,
        central_charge: rat(-10),
        h,
        beta,
    }
}

/// `-c/24`, the exponent shift restoring the conformal anomaly.
pub fn anomaly_shift(c: &BigRational) -> BigRational {
    -c / rat(24)
}

/// Whether a rational lies in `(1/3)Z`.
pub fn is_third_integral(r: &BigRational) -> bool {
    (r * rat(3)).is_integer()
}
