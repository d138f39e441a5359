//! End-to-end checks of the `parafermion` binary.

use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parafermion"))
        .args(args)
        .env_remove("PARAFERMION_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let output = run(&full);
    assert_eq!(output.status.code(), Some(0), "{args:?}");
    serde_json::from_str(&stdout(&output)).unwrap()
}

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

/// `(exponent, coefficient)` rows of a `chars` document.
fn char_rows(doc: &Value) -> Vec<(BigRational, BigInt)> {
    doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                rat(r["exponent"].as_str().unwrap()),
                r["coefficient"].as_str().unwrap().parse().unwrap(),
            )
        })
        .collect()
}

fn int_rows(pairs: &[(i64, i64)]) -> Vec<(BigRational, BigInt)> {
    pairs
        .iter()
        .map(|&(e, c)| (BigRational::from_integer(e.into()), BigInt::from(c)))
        .collect()
}

#[test]
fn chars_examples() {
    let doc = json(&[
        "chars", "--which", "N-sl2", "--via", "theta", "--order", "6",
    ]);
    assert_eq!(doc["kind"], "chars");
    assert_eq!(
        char_rows(&doc),
        int_rows(&[(0, 1), (2, 1), (3, 2), (4, 4), (5, 6)])
    );

    let doc = json(&[
        "chars", "--which", "T", "--m", "1", "--n", "1", "--via", "product", "--order", "7",
    ]);
    assert_eq!(char_rows(&doc), int_rows(&[(4, 1), (5, 2), (6, 3)]));

    let doc = json(&["chars", "--which", "phi", "--m", "-2", "--order", "10"]);
    assert_eq!(char_rows(&doc), int_rows(&[(2, 1), (5, -1), (9, 1)]));
}

#[test]
fn every_via_agrees_for_vacuum_characters() {
    let sl2 = json(&[
        "chars", "--which", "N-sl2", "--via", "theta", "--order", "25",
    ]);
    for via in ["ct", "lemma21", "qhyp", "dec"] {
        let other = json(&["chars", "--which", "N-sl2", "--via", via, "--order", "25"]);
        assert_eq!(char_rows(&other), char_rows(&sl2), "{via}");
    }
    let w0 = json(&["chars", "--which", "W0", "--via", "bkmz", "--order", "25"]);
    for via in ["sgn", "branch"] {
        let other = json(&["chars", "--which", "W0", "--via", via, "--order", "25"]);
        assert_eq!(char_rows(&other), char_rows(&w0), "{via}");
    }
}

#[test]
fn fractional_exponents_and_anomaly() {
    let doc = json(&[
        "chars", "--which", "T", "--m", "0", "--n", "1", "--order", "4",
    ]);
    let first = &doc["rows"][0];
    assert_eq!(first["exponent"], "5/3");
    assert_eq!(first["coefficient"], "1");

    let shifted = json(&["chars", "--which", "N-sl2", "--order", "3", "--anomaly"]);
    let exps: Vec<&str> = shifted["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exponent"].as_str().unwrap())
        .collect();
    assert_eq!(exps, vec!["5/12", "29/12"]);
}

#[test]
fn hw_and_branch_examples() {
    let doc = json(&["hw", "--p", "2", "--max", "3"]);
    assert_eq!(doc["kind"], "hw");
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let row11 = rows.iter().find(|r| r["m"] == 1 && r["n"] == 1).unwrap();
    assert_eq!(row11["h"], "4");
    assert_eq!(row11["beta"], "0");
    let row30 = rows.iter().find(|r| r["m"] == 3 && r["n"] == 0).unwrap();
    assert_eq!(row30["beta"], "405/8");

    let doc = json(&["branch", "--target", "N-sl2", "--order", "20"]);
    let rows = doc["rows"].as_array().unwrap();
    let hs: Vec<&str> = rows.iter().map(|r| r["h"].as_str().unwrap()).collect();
    assert_eq!(hs, vec!["0", "4", "12"]);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["m"], i);
        assert_eq!(r["n"], i);
        assert_eq!(r["multiplicity"], 1);
    }

    let doc = json(&["branch", "--target", "W0", "--order", "20"]);
    let rows = doc["rows"].as_array().unwrap();
    let row11 = rows.iter().find(|r| r["m"] == 1 && r["n"] == 1).unwrap();
    assert_eq!(row11["multiplicity"], 2);
    assert!(rows
        .iter()
        .all(|r| rat(r["h"].as_str().unwrap()) < rat("20")));
}

#[test]
fn verify_json_single_identity() {
    let doc = json(&["verify", "--order", "60", "--id", "lemma21"]);
    assert!(doc.is_object());
    assert_eq!(doc["kind"], "verify");
    assert_eq!(doc["order"], 60);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["id"], "lemma21");
    assert_eq!(rows[0]["status"], "pass");
}

#[test]
fn verify_text_lists_every_identity() {
    let output = run(&["verify", "--order", "12"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 17);
    assert!(rows
        .iter()
        .all(|r| r.split_whitespace().nth(1) == Some("PASS")));
}

#[test]
fn verify_csv_columns() {
    let output = run(&[
        "verify", "--order", "8", "--id", "qhyp", "--id", "gl2-inv", "--format", "csv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,status,order,mismatch_exponent,lhs,rhs,elapsed_ms")
    );
    let qhyp: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&qhyp[..6], &["qhyp", "pass", "8/1", "", "", ""]);
    let gl2: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&gl2[..3], &["gl2-inv", "pass", "grid:8"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--order", "0"][..],
        &["verify", "--order", "5", "--id", "no-such-identity"],
        &["chars", "--which", "N-sl2", "--via", "product"],
        &["chars", "--which", "T", "--m", "1"],
        &["chars", "--which", "T", "--m", "-1", "--n", "0"],
        &["chars", "--which", "phi", "--m", "1", "--anomaly"],
        &["chars", "--which", "N-sl2", "--order", "0"],
        &["hw", "--p", "0"],
        &["branch", "--target", "W5"],
        &["frobnicate"],
    ] {
        let output = run(args);
        assert_eq!(output.status.code(), Some(2), "{args:?}");
        assert!(!output.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trip_is_idempotent() {
    for args in [
        &["chars", "--which", "W2", "--order", "10"][..],
        &["hw", "--p", "3", "--max", "2"],
        &["branch", "--target", "W0", "--order", "15"],
        &["verify", "--order", "6", "--id", "T-char"],
    ] {
        let doc = json(args);
        let once = serde_json::to_string(&doc).unwrap();
        let reparsed: Value = serde_json::from_str(&once).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), once);
        assert_eq!(reparsed, doc);
    }
}

#[test]
fn formats_carry_identical_numbers() {
    let args = [
        "chars", "--which", "T", "--m", "2", "--n", "0", "--via", "weylsum", "--order", "12",
    ];
    let from_json = char_rows(&json(&args));

    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv_text = stdout(&run(&csv_args));
    let mut csv_lines = csv_text.lines();
    assert_eq!(csv_lines.next(), Some("exponent,coefficient"));
    let from_csv: Vec<_> = csv_lines
        .map(|l| {
            let (e, c) = l.split_once(',').unwrap();
            (rat(e), c.parse::<BigInt>().unwrap())
        })
        .collect();

    let text = stdout(&run(&args));
    let from_text: Vec<_> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut cols = l.split_whitespace();
            (
                rat(cols.next().unwrap()),
                cols.next().unwrap().parse::<BigInt>().unwrap(),
            )
        })
        .collect();

    assert!(!from_json.is_empty());
    assert_eq!(from_csv, from_json);
    assert_eq!(from_text, from_json);
}

#[test]
fn environment_sets_default_format() {
    let output = Command::new(env!("CARGO_BIN_EXE_parafermion"))
        .args(["chars", "--which", "phi", "--m", "0", "--order", "4"])
        .env("PARAFERMION_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&output),
        "exponent,coefficient\n0/1,1\n1/1,-1\n3/1,1\n"
    );
    let explicit = Command::new(env!("CARGO_BIN_EXE_parafermion"))
        .args([
            "chars", "--which", "phi", "--m", "0", "--order", "4", "--format", "text",
        ])
        .env("PARAFERMION_FORMAT", "csv")
        .output()
        .unwrap();
    assert!(stdout(&explicit).starts_with("exponent  coefficient\n"));
}

#[test]
fn help_exits_zero() {
    let output = run(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("verify"));
}
