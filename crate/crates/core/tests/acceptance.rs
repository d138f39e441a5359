//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (zero tolerance). The only inexact bound is
//! the wall-clock budget of criterion 1.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use parafermion_chars::bivar;
use parafermion_chars::characters::*;
use parafermion_chars::qseries::{false_theta, inverse_euler_squared, pochhammer_q, Length};
use parafermion_chars::verify::{self, find, Identity, Sample, Settings, Status, Value};
use parafermion_chars::{Exponent, QSeries, Series};

mod common;

/// Truncation order for every series criterion.
const ORDER: i64 = 60;
/// Criterion 1 wall-clock budget for `verify --order 60`.
const RUNTIME_BUDGET: Duration = Duration::from_secs(60);
const IDENTITY_COUNT: usize = 17;
/// Random cases per property in criterion 7; the runner seed is fixed.
const PROPERTY_CASES: u32 = 64;
const SL2_HEAD: [i64; 6] = [1, 0, 1, 2, 4, 6];
const W0_HEAD: [i64; 6] = [1, 0, 1, 2, 5, 8];

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ord(n: i64) -> Exponent {
    Exponent::from_int(n)
}

fn ensure(ok: bool, message: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn head(series: &QSeries, len: usize) -> Vec<BigInt> {
    (0..len as i64)
        .map(|e| series.coeff(ord(e)).unwrap())
        .collect()
}

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn identities_pass(ids: &[&str], settings: &Settings) -> std::result::Result<(), String> {
    for id in ids {
        let report = verify::run_identity_with(id, settings).map_err(|e| e.to_string())?;
        if let Some(m) = report.first_mismatch {
            return Err(format!(
                "{id} fails at member {:?}, exponent {:?}: {} vs {}",
                m.member, m.exponent, m.lhs, m.rhs
            ));
        }
    }
    Ok(())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_parafermion"))
        .args(["verify", "--order", "60", "--format", "text"])
        .env_remove("PARAFERMION_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&output.stdout);
    let passed = text
        .lines()
        .skip(1)
        .filter(|l| l.split_whitespace().nth(1) == Some("PASS"))
        .count();
    ensure(
        output.status.code() == Some(0),
        format!("exit status {:?}", output.status.code()),
    )?;
    ensure(
        passed == IDENTITY_COUNT,
        format!("{passed}/{IDENTITY_COUNT} PASS rows"),
    )?;
    ensure(
        elapsed < RUNTIME_BUDGET,
        format!("took {elapsed:.1?}, budget {RUNTIME_BUDGET:?}"),
    )?;
    Ok(format!(
        "{passed}/{IDENTITY_COUNT} identities in {elapsed:.1?} (budget {RUNTIME_BUDGET:?})"
    ))
}

fn criterion_2() -> Check {
    let settings = Settings::with_order(ORDER);
    identities_pass(&["andrews-ct", "lemma21", "qhyp", "dec-sl2"], &settings)?;
    let order = ord(ORDER);
    let forms = [
        ("ct", ch_n_sl2_ct::<BigInt>(order)),
        ("theta", ch_n_sl2_theta(order)),
        ("lemma21", ch_n_sl2_lemma21(order)),
        ("qhyp", ch_n_sl2_qhyp(order)),
        ("dec", ch_n_sl2_dec(order)),
    ];
    for (name, s) in &forms {
        ensure(s == &forms[0].1, format!("{name} differs from ct"))?;
        ensure(
            head(s, 6) == big(&SL2_HEAD),
            format!("{name} head {:?}", head(s, 6)),
        )?;
    }
    Ok(format!("five forms equal to q^{ORDER}, head {SL2_HEAD:?}"))
}

fn criterion_3() -> Check {
    let settings = Settings::with_order(ORDER);
    identities_pass(&["bkmz-branch", "sgn-form"], &settings)?;
    let order = ord(ORDER);
    let forms = [
        ("bkmz", ch_w0_bkmz::<BigInt>(order)),
        ("sgn", ch_w0_sgn(order)),
        ("branch", ch_w0_branch(order)),
    ];
    for (name, s) in &forms {
        ensure(s == &forms[0].1, format!("{name} differs from bkmz"))?;
        ensure(
            head(s, 6) == big(&W0_HEAD),
            format!("{name} head {:?}", head(s, 6)),
        )?;
    }
    Ok(format!("three forms equal to q^{ORDER}, head {W0_HEAD:?}"))
}

fn criterion_4() -> Check {
    let settings = Settings::with_order(ORDER);
    ensure(settings.t_grid == 8, "default T grid is not 8")?;
    identities_pass(&["T-char"], &settings)?;
    Ok(format!("Weyl sum = product for 0 <= m,n <= 8 to q^{ORDER}"))
}

fn criterion_5() -> Check {
    let settings = Settings::with_order(1);
    ensure(settings.hw_grid == 20, "default hw grid is not 20")?;
    identities_pass(&["hw-consistency"], &settings)?;
    let d11 = highest_weight(2, 1, 1).map_err(|e| e.to_string())?;
    ensure(
        d11.h == BigRational::from_integer(4.into()),
        format!("h_11 = {}", d11.h),
    )?;
    for m in 0..=20 {
        let d = highest_weight(2, m, m).map_err(|e| e.to_string())?;
        ensure(
            d.beta == BigRational::from_integer(0.into()),
            format!("beta_{m}{m} = {}", d.beta),
        )?;
    }
    let d30 = highest_weight(2, 3, 0).map_err(|e| e.to_string())?;
    ensure(
        d30.beta == BigRational::new(405.into(), 8.into()),
        format!("beta_30 = {}", d30.beta),
    )?;
    Ok("p=2 general = closed form on m,n <= 20; h_11 = 4, beta_mm = 0, beta_30 = 405/8".into())
}

fn criterion_6() -> Check {
    let settings = Settings::with_order(1);
    ensure(
        settings.lie_grid == 10 && settings.gl2_grid == 8,
        "default Lie grids changed",
    )?;
    identities_pass(&["weight0-mult", "gl2-inv"], &settings)?;
    Ok(
        "mult_0 = min(m+1,n+1) on root lattice m,n <= 10; gl(2) invariants = delta_mn on m,n <= 8"
            .into(),
    )
}

fn series_strategy() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    let one = |order: Exponent| {
        prop::collection::vec((0i64..90, -6i64..=6), 0..10).prop_map(move |terms| {
            Series::from_terms(
                terms
                    .into_iter()
                    .map(|(e, c)| (Exponent::from_scaled(e), BigInt::from(c))),
                order,
            )
        })
    };
    (6i64..90)
        .prop_map(Exponent::from_scaled)
        .prop_flat_map(move |o| (one(o), one(o), one(o)))
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) -> std::result::Result<(), String> {
    let config = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_7() -> Check {
    run_property("ring axioms", series_strategy(), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        Ok(())
    })?;
    run_property("invert round-trip", series_strategy(), |(a, _, _)| {
        let order = a.order();
        let unit = &a.shift(Exponent::from_scaled(1)).truncate(order) + &QSeries::one(order);
        let inverse = unit.invert().expect("constant term is 1");
        prop_assert_eq!(&unit * &inverse, QSeries::one(order));
        Ok(())
    })?;
    run_property("false theta evenness", -40i64..=40, |m| {
        prop_assert_eq!(
            false_theta::<BigInt>(m, ord(ORDER)),
            false_theta::<BigInt>(-m, ord(ORDER))
        );
        Ok(())
    })?;
    for (name, f) in common::generators() {
        ensure(
            f(ord(60)).truncate(ord(30)) == f(ord(30)),
            format!("truncation: {name}"),
        )?;
    }
    for (name, f) in common::characters() {
        ensure(
            f(ord(40)).is_nonnegative(),
            format!("nonnegativity: {name}"),
        )?;
    }
    ensure(
        bivar::double_pochhammer_inverse::<BigInt>(ord(30)).is_x_symmetric(),
        "x-symmetry: E",
    )?;
    for s in 0..=4 {
        ensure(
            bivar::affine_sl2_char::<BigInt>(s, ord(30)).is_x_symmetric(),
            format!("x-symmetry: s={s}"),
        )?;
    }
    let euler = pochhammer_q::<BigInt>(Length::Infinite, ord(ORDER)).pow(2);
    ensure(
        &inverse_euler_squared(ord(ORDER)) * &euler == QSeries::one(ord(ORDER)),
        "invert: (q)_inf^2",
    )?;
    Ok(format!(
        "ring axioms, invert, Phi evenness ({PROPERTY_CASES} cases each); truncation 60->30 for {} generators; \
         nonnegativity; x-symmetry",
        common::generators().len()
    ))
}

fn expect_failure(
    identity: &Identity,
    settings: &Settings,
    member: &str,
    exponent: Option<Exponent>,
) -> std::result::Result<String, String> {
    let report = identity.run(settings);
    ensure(
        report.status == Status::Fail,
        format!("{} still passes", identity.id),
    )?;
    let m = report.first_mismatch.ok_or("no mismatch reported")?;
    ensure(
        m.member == member && m.exponent == exponent,
        format!(
            "{} mismatch at {:?} {:?}",
            identity.id, m.member, m.exponent
        ),
    )?;
    Ok(match exponent {
        Some(e) => format!("{} @ q^{e:?}", identity.id),
        None => format!("{} @ {member}", identity.id),
    })
}

fn criterion_8() -> Check {
    let settings = Settings::with_order(ORDER);
    let mut caught = Vec::new();

    // h_{m,n} linear term m+n -> m+2n in the product form.
    let mut t_char = find("T-char").map_err(|e| e.to_string())?;
    t_char.rhs = Arc::new(|st: &Settings| {
        let mut out = Vec::new();
        for m in 0..=st.t_grid {
            for n in 0..=st.t_grid {
                let s = ch_t_product::<BigInt>(m, n, st.order)
                    .shift(ord(i64::from(n)))
                    .truncate(st.order);
                out.push(Sample::series(format!("({m},{n})"), s));
            }
        }
        out
    });
    caught.push(expect_failure(
        &t_char,
        &settings,
        "(0,1)",
        Some(Exponent::from_ratio(5, 3).unwrap()),
    )?);

    // One extra unit at q^7 on the right-hand side.
    let mut lemma = find("lemma21").map_err(|e| e.to_string())?;
    let honest = lemma.rhs.clone();
    lemma.rhs = Arc::new(move |st: &Settings| {
        honest(st)
            .into_iter()
            .map(|s| match s.value {
                Value::Series(v) => {
                    Sample::series(s.member, &v + &QSeries::polynomial([(7, 1)], v.order()))
                }
                Value::Exact(_) => s,
            })
            .collect()
    });
    caught.push(expect_failure(&lemma, &settings, "", Some(ord(7)))?);

    // Multiplicity min(m+1,n+1) -> max(m+1,n+1).
    let mut bkmz = find("bkmz-branch").map_err(|e| e.to_string())?;
    bkmz.lhs = Arc::new(|st: &Settings| {
        let mut numerator = QSeries::zero(st.order);
        for_each_weight_below(st.order, |m, n| {
            if m % 3 == n % 3 {
                let k = BigInt::from(m.max(n) + 1);
                numerator = &numerator + &t_numerator::<BigInt>(m, n, st.order).scale(&k);
            }
        });
        vec![Sample::series(
            "",
            &numerator * &inverse_euler_squared(st.order),
        )]
    });
    caught.push(expect_failure(&bkmz, &settings, "", Some(ord(9)))?);

    // beta constant 3+4m+2n -> 3+4m+3n in the closed form.
    let mut hw = find("hw-consistency").map_err(|e| e.to_string())?;
    hw.rhs = Arc::new(|st: &Settings| {
        let mut out = Vec::new();
        for m in 0..=i64::from(st.hw_grid) {
            for n in 0..=i64::from(st.hw_grid) {
                let h = BigRational::new((2 * (m * m + n * n + m * n)).into(), 3.into())
                    + BigRational::from_integer((m + n).into());
                let beta = BigRational::new(
                    ((m - n) * (3 + 4 * m + 3 * n) * (3 + 2 * m + 4 * n)).into(),
                    8.into(),
                );
                out.push(Sample::exact(format!("({m},{n}) h"), h));
                out.push(Sample::exact(format!("({m},{n}) beta"), beta));
            }
        }
        out
    });
    caught.push(expect_failure(&hw, &settings, "(0,1) beta", None)?);

    Ok(format!(
        "{} perturbations caught: {}",
        caught.len(),
        caught.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("full suite at order 60", criterion_1),
        ("four-way sl(2) parafermion agreement", criterion_2),
        ("three-way W0 vacuum agreement", criterion_3),
        ("Weyl sum vs product", criterion_4),
        ("highest-weight consistency", criterion_5),
        ("Lie-theoretic brute force", criterion_6),
        ("property suite", criterion_7),
        ("fault sensitivity", criterion_8),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("criterion {} FAIL  {title}: {reason}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
