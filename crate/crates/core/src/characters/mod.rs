//! Character generators and conformal data.
//!
//! Each generator computes one formula on its own; agreement between
//! generators for the same module is checked by [`crate::verify`].
//! Characters omit the `q^{-c/24}` prefactor.

pub mod conformal;
pub mod parafermion;
pub mod w3;

pub use conformal::{
    anomaly_shift, central_charge_k, central_charge_p, highest_weight, highest_weight_p2,
    w23_bracket_coeffs, BracketCoefficients, HighestWeightData,
};
pub use parafermion::{
    ch_n_2s_ct, ch_n_2s_theta, ch_n_sl2_ct, ch_n_sl2_dec, ch_n_sl2_lemma21, ch_n_sl2_qhyp,
    ch_n_sl2_theta, coeff_x_bivar, coeff_x_theta, ct_string_bivar, ct_string_hypergeometric,
    f_lead, f_poly, g_s, g_total, lift, min_weighted_f_sum, n_2s_theta_numerator_lifted,
};
pub use w3::{
    ch_t_product, ch_t_weylsum, ch_w0_bkmz, ch_w0_branch, ch_w0_sgn, ch_w2_full, conformal_weight,
    for_each_weight_below, t_numerator,
};
