//! Generator lists shared by the property and acceptance suites.

use parafermion_chars::bivar;
use parafermion_chars::characters::*;
use parafermion_chars::qseries::{false_theta, inverse_euler_squared, pochhammer_q, Length};
use parafermion_chars::{Exponent, QSeries};

pub type Generator = Box<dyn Fn(Exponent) -> QSeries>;

/// Every character generator, at fixed small parameters.
pub fn generators() -> Vec<(&'static str, Generator)> {
    vec![
        ("ch_n_sl2_ct", Box::new(ch_n_sl2_ct)),
        ("ch_n_sl2_theta", Box::new(ch_n_sl2_theta)),
        ("ch_n_sl2_lemma21", Box::new(ch_n_sl2_lemma21)),
        ("ch_n_sl2_qhyp", Box::new(ch_n_sl2_qhyp)),
        ("ch_n_sl2_dec", Box::new(ch_n_sl2_dec)),
        ("ch_n_2s_ct(1)", Box::new(|o| ch_n_2s_ct(1, o))),
        ("ch_n_2s_ct(3)", Box::new(|o| ch_n_2s_ct(3, o))),
        ("ch_n_2s_theta(2)", Box::new(|o| ch_n_2s_theta(2, o))),
        ("ch_t_product(2,1)", Box::new(|o| ch_t_product(2, 1, o))),
        ("ch_t_weylsum(1,4)", Box::new(|o| ch_t_weylsum(1, 4, o))),
        ("ch_w0_bkmz", Box::new(ch_w0_bkmz)),
        ("ch_w0_sgn", Box::new(ch_w0_sgn)),
        ("ch_w0_branch", Box::new(ch_w0_branch)),
        ("ch_w2_full", Box::new(ch_w2_full)),
        ("g_s(2)", Box::new(|o| g_s(2, o))),
        ("g_total", Box::new(g_total)),
        ("min_weighted_f_sum", Box::new(min_weighted_f_sum)),
        (
            "ct_string_hypergeometric(2)",
            Box::new(|o| ct_string_hypergeometric(2, o)),
        ),
        ("ct_string_bivar(2)", Box::new(|o| ct_string_bivar(2, o))),
        ("coeff_x_bivar(3)", Box::new(|o| coeff_x_bivar(3, o))),
        ("coeff_x_theta(3)", Box::new(|o| coeff_x_theta(3, o))),
        ("false_theta(-2)", Box::new(|o| false_theta(-2, o))),
        ("inverse_euler_squared", Box::new(inverse_euler_squared)),
        (
            "pochhammer_q(inf)",
            Box::new(|o| pochhammer_q(Length::Infinite, o)),
        ),
        (
            "affine_ct(2)",
            Box::new(|o| bivar::affine_sl2_char(2, o).constant_term()),
        ),
    ]
}

/// Characters proper: graded dimensions, hence nonnegative.
pub fn characters() -> Vec<(String, Generator)> {
    let mut out: Vec<(String, Generator)> = vec![
        ("ch_n_sl2_theta".into(), Box::new(ch_n_sl2_theta)),
        ("ch_n_sl2_ct".into(), Box::new(ch_n_sl2_ct)),
        ("ch_n_sl2_lemma21".into(), Box::new(ch_n_sl2_lemma21)),
        ("ch_n_sl2_qhyp".into(), Box::new(ch_n_sl2_qhyp)),
        ("ch_n_sl2_dec".into(), Box::new(ch_n_sl2_dec)),
        ("ch_w0_bkmz".into(), Box::new(ch_w0_bkmz)),
        ("ch_w0_sgn".into(), Box::new(ch_w0_sgn)),
        ("ch_w0_branch".into(), Box::new(ch_w0_branch)),
        ("ch_w2_full".into(), Box::new(ch_w2_full)),
        (
            "inverse_euler_squared".into(),
            Box::new(inverse_euler_squared),
        ),
    ];
    for s in 0..=4 {
        out.push((
            format!("ch_n_2s_theta({s})"),
            Box::new(move |o| ch_n_2s_theta(s, o)),
        ));
        out.push((
            format!("ch_n_2s_ct({s})"),
            Box::new(move |o| ch_n_2s_ct(s, o)),
        ));
    }
    for m in 0..=5 {
        for n in 0..=5 {
            out.push((
                format!("ch_t_product({m},{n})"),
                Box::new(move |o| ch_t_product(m, n, o)),
            ));
            out.push((
                format!("ch_t_weylsum({m},{n})"),
                Box::new(move |o| ch_t_weylsum(m, n, o)),
            ));
        }
    }
    out
}
