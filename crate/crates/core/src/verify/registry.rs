use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Identity, Sample, Scope, Settings};
use crate::bivar::{self, XSign};
use crate::characters::{
    ch_n_2s_ct, ch_n_2s_theta, ch_n_sl2_ct, ch_n_sl2_dec, ch_n_sl2_lemma21, ch_n_sl2_qhyp,
    ch_n_sl2_theta, ch_t_product, ch_t_weylsum, ch_w0_bkmz, ch_w0_branch, ch_w0_sgn, coeff_x_theta,
    ct_string_hypergeometric, g_s, g_total, highest_weight, highest_weight_p2, min_weighted_f_sum,
    n_2s_theta_numerator_lifted,
};
use crate::lie_a2::{self, Weight};
use crate::qseries::{false_theta, inverse_euler_squared, Exponent};
use crate::QSeries;

fn single(f: fn(Exponent) -> QSeries) -> super::Builder {
    Arc::new(move |st: &Settings| vec![Sample::series("", f(st.order))])
}

fn per_s(max: fn(&Settings) -> u32, f: fn(u32, Exponent) -> QSeries) -> super::Builder {
    Arc::new(move |st: &Settings| {
        (0..=max(st))
            .map(|s| Sample::series(format!("s={s}"), f(s, st.order)))
            .collect()
    })
}

fn grid(size: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=size).flat_map(move |m| (0..=size).map(move |n| (m, n)))
}

fn point(m: u32, n: u32) -> String {
    format!("({m},{n})")
}

fn euler_members(f: fn(XSign, Exponent) -> bivar::BivarSeries<BigInt>) -> super::Builder {
    Arc::new(move |st: &Settings| {
        let mut out = Vec::new();
        for (sign, label) in [(XSign::Plus, "+"), (XSign::Minus, "-")] {
            let series = f(sign, st.order);
            for k in 0..st.order.ceil_int().max(0) {
                let power = sign.apply(k);
                out.push(Sample::series(
                    format!("x^{label}{k}"),
                    series.coeff_x(power),
                ));
            }
        }
        out
    })
}

fn hw_samples(st: &Settings, f: impl Fn(u32, u32) -> (BigRational, BigRational)) -> Vec<Sample> {
    let mut out = Vec::new();
    for (m, n) in grid(st.hw_grid) {
        let (h, beta) = f(m, n);
        out.push(Sample::exact(format!("{} h", point(m, n)), h));
        out.push(Sample::exact(format!("{} beta", point(m, n)), beta));
    }
    out
}

fn root_lattice_grid(size: u32) -> impl Iterator<Item = (u32, u32)> {
    grid(size).filter(|&(m, n)| Weight::new(m, n).in_root_lattice())
}

pub fn registry() -> Vec<Identity> {
    vec![
        Identity {
            id: "andrews-ct",
            description: "constant-term and false-theta forms of the sl(2) parafermion vacuum",
            anchor: "CT_x 1/((xq)_∞(x^{-1}q)_∞) = (Φ_0 - Φ_{-1}) / (q;q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_n_sl2_ct"],
            rhs_ops: &["ch_n_sl2_theta"],
            lhs: single(ch_n_sl2_ct),
            rhs: single(ch_n_sl2_theta),
        },
        Identity {
            id: "lemma21",
            description: "lifted triple sum against the false-theta form",
            anchor: "(Φ_0 - Φ_{-1})/(q)_∞² = Σ_{m≥0} q^{2m(m-1)} (...)/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_n_sl2_theta"],
            rhs_ops: &["ch_n_sl2_lemma21"],
            lhs: single(ch_n_sl2_theta),
            rhs: single(ch_n_sl2_lemma21),
        },
        Identity {
            id: "qhyp",
            description: "q-hypergeometric single sum against the false-theta form",
            anchor: "Σ_{n≥0} q^{2n}/(q)_n² = (Φ_0 - Φ_{-1})/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_n_sl2_qhyp"],
            rhs_ops: &["ch_n_sl2_theta"],
            lhs: single(ch_n_sl2_qhyp),
            rhs: single(ch_n_sl2_theta),
        },
        Identity {
            id: "euler",
            description: "Euler's expansion of 1/(x^{±1}q;q)_∞, coefficient by coefficient in x",
            anchor: "1/(xq;q)_∞ = Σ_{n≥0} x^n q^n/(q;q)_n",
            scope: Scope::Order,
            lhs_ops: &["inv_pochhammer_product"],
            rhs_ops: &["euler_inv_pochhammer"],
            lhs: euler_members(bivar::inv_pochhammer_product),
            rhs: euler_members(bivar::euler_inv_pochhammer),
        },
        Identity {
            id: "para-2s",
            description: "constant-term and false-theta forms of ch N(2s)",
            anchor: "CT_x (x^{-s}+...+x^s) q^{2s(s+1)}/((xq)_∞(x^{-1}q)_∞) = q^{2s(s+1)}(Φ_0 + Φ_{-1} - 2Φ_{-s-1})/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_n_2s_ct"],
            rhs_ops: &["ch_n_2s_theta"],
            lhs: per_s(|st| st.s_max, ch_n_2s_ct),
            rhs: per_s(|st| st.s_max, ch_n_2s_theta),
        },
        Identity {
            id: "Gs",
            description: "the F-sum G_s against the lifted false-theta numerator of ch N(2s)",
            anchor: "G_s = q^{2s(s+1)}(Φ_0 + Φ_{-1} - 2Φ_{-s-1})",
            scope: Scope::Order,
            lhs_ops: &["g_s"],
            rhs_ops: &["n_2s_theta_numerator_lifted"],
            lhs: per_s(|st| st.s_max, g_s),
            rhs: per_s(|st| st.s_max, n_2s_theta_numerator_lifted),
        },
        Identity {
            id: "par-char-step",
            description: "widening the x-string by one step adds twice the x^{s+1} coefficient",
            anchor: "CT[S_{s+1}·E] = CT[S_s·E] + 2(Φ_{-s-1} - Φ_{-s-2})/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["double_pochhammer_inverse", "sl2_weight_poly"],
            rhs_ops: &["ct_string_hypergeometric", "false_theta", "inverse_euler_squared"],
            lhs: Arc::new(|st: &Settings| {
                let e = bivar::double_pochhammer_inverse::<BigInt>(st.order);
                (0..=st.s_max)
                    .map(|s| {
                        let string = bivar::sl2_weight_poly(s + 1);
                        Sample::series(format!("s={s}"), e.mul_by_x_poly(&string).constant_term())
                    })
                    .collect()
            }),
            rhs: per_s(|st| st.s_max, |s, order| {
                let s = i64::from(s);
                let step = &false_theta::<BigInt>(-s - 1, order) - &false_theta(-s - 2, order);
                let step = (&step * &inverse_euler_squared(order)).scale(&BigInt::from(2));
                &ct_string_hypergeometric(s as u32, order) + &step
            }),
        },
        Identity {
            id: "min-sum",
            description: "min-weighted F-sum against the sum of all G_s",
            anchor: "Σ_{m≡n (3)} min(m,n) F_{m,n} = Σ_{s≥0} G_s",
            scope: Scope::Order,
            lhs_ops: &["min_weighted_f_sum"],
            rhs_ops: &["g_total"],
            lhs: single(min_weighted_f_sum),
            rhs: single(g_total),
        },
        Identity {
            id: "T-char",
            description: "Weyl-sum and product forms of ch T_{mω_1+nω_2}",
            anchor: "q^Δ Σ_w ε(w) q^{-<w(λ+ρ),ρ>}/(q)_∞² = q^{h}(1-q^{m+1})(1-q^{n+1})(1-q^{m+n+2})/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_t_weylsum"],
            rhs_ops: &["ch_t_product"],
            lhs: Arc::new(|st: &Settings| {
                grid(st.t_grid)
                    .map(|(m, n)| Sample::series(point(m, n), ch_t_weylsum(m, n, st.order)))
                    .collect()
            }),
            rhs: Arc::new(|st: &Settings| {
                grid(st.t_grid)
                    .map(|(m, n)| Sample::series(point(m, n), ch_t_product(m, n, st.order)))
                    .collect()
            }),
        },
        Identity {
            id: "bkmz-branch",
            description: "vacuum character as a T-sum and as a sum of parafermion modules",
            anchor: "Σ_{m≡n (3)} min(m+1,n+1) ch T_{mω_1+nω_2} = Σ_{s≥0} ch N(2s)",
            scope: Scope::Order,
            lhs_ops: &["ch_w0_bkmz"],
            rhs_ops: &["ch_w0_branch"],
            lhs: single(ch_w0_bkmz),
            rhs: single(ch_w0_branch),
        },
        Identity {
            id: "sgn-form",
            description: "signed indefinite double sum for the vacuum character",
            anchor: "Σ_{n_1≥0, n_2∈Z} sgn(n_2)(-1)^{n_1} q^{n_1(n_1+1)/2 + n_1n_2 + 2n_2² + 2n_2}/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["ch_w0_sgn"],
            rhs_ops: &["ch_w0_bkmz"],
            lhs: single(ch_w0_sgn),
            rhs: single(ch_w0_bkmz),
        },
        Identity {
            id: "coeff-x",
            description: "x^m coefficients of the double Pochhammer inverse",
            anchor: "[x^m] 1/((xq)_∞(x^{-1}q)_∞) = (Φ_{-|m|} - Φ_{-|m|-1})/(q)_∞²",
            scope: Scope::Order,
            lhs_ops: &["double_pochhammer_inverse"],
            rhs_ops: &["coeff_x_theta"],
            lhs: Arc::new(|st: &Settings| {
                let e = bivar::double_pochhammer_inverse::<BigInt>(st.order);
                (0..=st.coeff_x_max)
                    .map(|m| Sample::series(format!("m={m}"), e.coeff_x(i64::from(m))))
                    .collect()
            }),
            rhs: Arc::new(|st: &Settings| {
                (0..=st.coeff_x_max)
                    .map(|m| Sample::series(format!("m={m}"), coeff_x_theta(i64::from(m), st.order)))
                    .collect()
            }),
        },
        Identity {
            id: "dec-sl2",
            description: "sl(2) parafermion vacuum as the diagonal T-sum",
            anchor: "(Φ_0 - Φ_{-1})/(q)_∞² = Σ_{m≥0} ch T_{mω_1+mω_2}",
            scope: Scope::Order,
            lhs_ops: &["ch_n_sl2_theta"],
            rhs_ops: &["ch_n_sl2_dec"],
            lhs: single(ch_n_sl2_theta),
            rhs: single(ch_n_sl2_dec),
        },
        Identity {
            id: "affine-ct",
            description: "constant term of the affine sl(2) character at level -3/2",
            anchor: "CT_x ch L(2sω_1) = ch N(2s)",
            scope: Scope::Order,
            lhs_ops: &["affine_sl2_char"],
            rhs_ops: &["ch_n_2s_theta"],
            lhs: per_s(|st| st.affine_s_max, |s, order| {
                bivar::affine_sl2_char::<BigInt>(s, order).constant_term()
            }),
            rhs: per_s(|st| st.affine_s_max, ch_n_2s_theta),
        },
        Identity {
            id: "hw-consistency",
            description: "general-p highest-weight data at p = 2 against the closed forms",
            anchor: "h_{m,n} = ⅔(m²+n²+mn) + m + n, β from the closed form at p = 2",
            scope: Scope::Grid(|st| st.hw_grid),
            lhs_ops: &["highest_weight"],
            rhs_ops: &["highest_weight_p2"],
            lhs: Arc::new(|st: &Settings| {
                hw_samples(st, |m, n| {
                    let d = highest_weight(2, m, n).expect("p = 2 is valid");
                    (d.h, d.beta)
                })
            }),
            rhs: Arc::new(|st: &Settings| {
                hw_samples(st, |m, n| {
                    let d = highest_weight_p2(m, n);
                    (d.h, d.beta)
                })
            }),
        },
        Identity {
            id: "weight0-mult",
            description: "zero-weight multiplicity of V(mω_1+nω_2) on the root lattice",
            anchor: "mult_0 V(mω_1+nω_2) = min(m+1, n+1) for m ≡ n (3)",
            scope: Scope::Grid(|st| st.lie_grid),
            lhs_ops: &["weight_zero_mult"],
            rhs_ops: &["min"],
            lhs: Arc::new(|st: &Settings| {
                root_lattice_grid(st.lie_grid)
                    .map(|(m, n)| Sample::integer(point(m, n), lie_a2::weight_zero_mult(Weight::new(m, n))))
                    .collect()
            }),
            rhs: Arc::new(|st: &Settings| {
                root_lattice_grid(st.lie_grid)
                    .map(|(m, n)| Sample::integer(point(m, n), u64::from(m.min(n) + 1)))
                    .collect()
            }),
        },
        Identity {
            id: "gl2-inv",
            description: "gl(2)-invariants in V(mω_1+nω_2) under the Levi subalgebra",
            anchor: "dim V(mω_1+nω_2)^{gl(2)} = δ_{m,n}",
            scope: Scope::Grid(|st| st.gl2_grid),
            lhs_ops: &["gl2_invariant_dim"],
            rhs_ops: &["kronecker_delta"],
            lhs: Arc::new(|st: &Settings| {
                grid(st.gl2_grid)
                    .map(|(m, n)| Sample::integer(point(m, n), lie_a2::gl2_invariant_dim(Weight::new(m, n))))
                    .collect()
            }),
            rhs: Arc::new(|st: &Settings| {
                grid(st.gl2_grid)
                    .map(|(m, n)| Sample::integer(point(m, n), u64::from(m == n)))
                    .collect()
            }),
        },
    ]
}
