//! The `parafermion` command line: `verify`, `chars`, `hw` and `branch`.
//!
//! Exit status is 0 on success, 1 when a requested identity fails and 2 for
//! usage errors. `PARAFERMION_FORMAT` sets the default output format.

mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

use crate::characters::{self, conformal_weight, for_each_weight_below, highest_weight};
use crate::lie_a2::{self, Weight};
use crate::qseries::{false_theta, Exponent};
use crate::verify::{self, IdentityReport, ReportScope, Settings};
use crate::{Error, QSeries};

pub use table::{Cell, Format, Kind, OutputRecord, Rat, Table};

#[derive(Parser, Debug)]
#[command(
    name = "parafermion",
    version,
    about = "Exact q-series characters and identity checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "PARAFERMION_FORMAT", default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the registered identities to a truncation order.
    Verify(VerifyArgs),
    /// Print a character as exponent/coefficient rows.
    Chars(CharsArgs),
    /// Print highest-weight data (m, n, h, beta).
    Hw(HwArgs),
    /// Print branching multiplicities for modules with h below the order.
    Branch(BranchArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 60)]
    order: i64,
    /// Identity to run; repeat for several. Default: all.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    s_max: Option<u32>,
    #[arg(long)]
    affine_s_max: Option<u32>,
    #[arg(long)]
    coeff_x_max: Option<u32>,
    #[arg(long)]
    t_grid: Option<u32>,
    #[arg(long)]
    hw_grid: Option<u32>,
    #[arg(long)]
    lie_grid: Option<u32>,
    #[arg(long)]
    gl2_grid: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "N-sl2")]
    NSl2,
    #[value(name = "N-2s")]
    N2s,
    #[value(name = "T")]
    T,
    #[value(name = "W0")]
    W0,
    #[value(name = "W2")]
    W2,
    #[value(name = "phi")]
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Ct,
    Theta,
    Lemma21,
    Qhyp,
    Bkmz,
    Sgn,
    Branch,
    Dec,
    Product,
    Weylsum,
}

#[derive(Args, Debug)]
struct CharsArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, value_enum)]
    via: Option<Via>,
    /// First Dynkin label for T; index of the false theta for phi.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, default_value_t = 20)]
    order: i64,
    /// Restore the q^{5/12} prefactor (c = -10) in the printed exponents.
    #[arg(long)]
    anomaly: bool,
}

#[derive(Args, Debug)]
struct HwArgs {
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Bound on both m and n.
    #[arg(long, default_value_t = 3)]
    max: u32,
    #[arg(long)]
    max_m: Option<u32>,
    #[arg(long)]
    max_n: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    #[value(name = "W0")]
    W0,
    #[value(name = "N-sl2")]
    NSl2,
}

#[derive(Args, Debug)]
struct BranchArgs {
    #[arg(long, value_enum)]
    target: Target,
    #[arg(long, default_value_t = 20)]
    order: i64,
}

/// A failed command: usage problems exit 2, failing identities exit 1.
enum Failure {
    Usage(String),
    Identity,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("output error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => cmd_verify(&a, cli.format, out, err),
        Command::Chars(a) => cmd_chars(&a, cli.format, out),
        Command::Hw(a) => cmd_hw(&a, cli.format, out),
        Command::Branch(a) => cmd_branch(&a, cli.format, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Identity) => 1,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn positive_order(order: i64) -> std::result::Result<Exponent, Failure> {
    if order < 1 {
        return Err(Error::InvalidOrder(Exponent::from_int(order)).into());
    }
    Ok(Exponent::from_int(order))
}

fn rat(e: Exponent) -> Rat {
    Rat(e.to_rational())
}

fn big_rat(r: &num_rational::BigRational) -> Cell {
    Cell::Str(r.to_string())
}

fn cmd_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut settings = Settings::new(positive_order(a.order)?);
    let overrides = [
        (a.s_max, &mut settings.s_max),
        (a.affine_s_max, &mut settings.affine_s_max),
        (a.coeff_x_max, &mut settings.coeff_x_max),
        (a.t_grid, &mut settings.t_grid),
        (a.hw_grid, &mut settings.hw_grid),
        (a.lie_grid, &mut settings.lie_grid),
        (a.gl2_grid, &mut settings.gl2_grid),
    ];
    for (value, slot) in overrides {
        if let Some(v) = value {
            *slot = v;
        }
    }
    let run = || {
        if a.ids.is_empty() {
            verify::run_all_with(&settings)
        } else {
            verify::run_selected(&a.ids, &settings)
        }
    };
    let reports = match a.jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    verify_table(&reports, a.order, format).render(format, out)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    if format == Format::Text {
        writeln!(err, "{passed}/{} identities passed", reports.len())?;
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn verify_table(reports: &[IdentityReport], order: i64, format: Format) -> Table {
    let mut table = Table::new(
        Kind::Verify,
        Some(order),
        vec![
            "id",
            "status",
            "order",
            "member",
            "mismatch_exponent",
            "lhs",
            "rhs",
            "elapsed_ms",
        ],
    );
    table.csv_skip = vec!["member"];
    for r in reports {
        let status = match format {
            Format::Text => r.status.as_str().to_uppercase(),
            _ => r.status.as_str().to_string(),
        };
        let scope = match r.scope {
            ReportScope::Order(e) => Cell::Exp(rat(e)),
            ReportScope::Grid(n) => Cell::Str(format!("grid:{n}")),
        };
        let (member, exponent, lhs, rhs) = match &r.first_mismatch {
            None => (Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty),
            Some(m) => (
                Cell::Str(m.member.clone()),
                m.exponent.map_or(Cell::Empty, |e| Cell::Exp(rat(e))),
                big_rat(&m.lhs),
                big_rat(&m.rhs),
            ),
        };
        let elapsed = u64::try_from(r.elapsed.as_millis()).unwrap_or(u64::MAX);
        table.push(vec![
            Cell::Str(r.id.clone()),
            Cell::Str(status),
            scope,
            member,
            exponent,
            lhs,
            rhs,
            Cell::Int(elapsed),
        ]);
    }
    table
}

fn need<T: Copy>(value: Option<T>, flag: &str, which: &str) -> std::result::Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for --which {which}")))
}

fn label(m: i64) -> std::result::Result<u32, Failure> {
    u32::try_from(m)
        .map_err(|_| Failure::Usage(format!("--m must be a nonnegative Dynkin label, got {m}")))
}

fn bad_via(via: Via, which: &str) -> Failure {
    let name = via
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Failure::Usage(format!("--via {name} is not available for --which {which}"))
}

fn select_series(a: &CharsArgs, order: Exponent) -> std::result::Result<QSeries, Failure> {
    use characters::*;
    let series = match a.which {
        Which::NSl2 => match a.via.unwrap_or(Via::Theta) {
            Via::Ct => ch_n_sl2_ct(order),
            Via::Theta => ch_n_sl2_theta(order),
            Via::Lemma21 => ch_n_sl2_lemma21(order),
            Via::Qhyp => ch_n_sl2_qhyp(order),
            Via::Dec => ch_n_sl2_dec(order),
            other => return Err(bad_via(other, "N-sl2")),
        },
        Which::N2s => {
            let s = need(a.s, "s", "N-2s")?;
            match a.via.unwrap_or(Via::Theta) {
                Via::Ct => ch_n_2s_ct(s, order),
                Via::Theta => ch_n_2s_theta(s, order),
                other => return Err(bad_via(other, "N-2s")),
            }
        }
        Which::T => {
            let m = label(need(a.m, "m", "T")?)?;
            let n = need(a.n, "n", "T")?;
            match a.via.unwrap_or(Via::Product) {
                Via::Product => ch_t_product(m, n, order),
                Via::Weylsum => ch_t_weylsum(m, n, order),
                other => return Err(bad_via(other, "T")),
            }
        }
        Which::W0 => match a.via.unwrap_or(Via::Bkmz) {
            Via::Bkmz => ch_w0_bkmz(order),
            Via::Sgn => ch_w0_sgn(order),
            Via::Branch => ch_w0_branch(order),
            other => return Err(bad_via(other, "W0")),
        },
        Which::W2 => match a.via {
            None => ch_w2_full(order),
            Some(other) => return Err(bad_via(other, "W2")),
        },
        Which::Phi => match a.via {
            None => false_theta(need(a.m, "m", "phi")?, order),
            Some(other) => return Err(bad_via(other, "phi")),
        },
    };
    Ok(series)
}

fn cmd_chars(a: &CharsArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let order = positive_order(a.order)?;
    if a.anomaly && a.which == Which::Phi {
        return Err(Failure::Usage(
            "--anomaly applies to characters, not to phi".into(),
        ));
    }
    let series = select_series(a, order)?;
    // -c/24 at c = -10; applied only to the printed exponents.
    let shift = if a.anomaly {
        Rational64::new(5, 12)
    } else {
        Rational64::new(0, 1)
    };
    let mut table = Table::new(Kind::Chars, Some(a.order), vec!["exponent", "coefficient"]);
    for (e, c) in series.terms() {
        table.push(vec![
            Cell::Exp(Rat(e.to_rational() + shift)),
            Cell::Str(c.to_string()),
        ]);
    }
    table.render(format, out)?;
    Ok(())
}

fn cmd_hw(a: &HwArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let (max_m, max_n) = (a.max_m.unwrap_or(a.max), a.max_n.unwrap_or(a.max));
    let mut table = Table::new(Kind::Hw, None, vec!["m", "n", "h", "beta"]);
    for m in 0..=max_m {
        for n in 0..=max_n {
            let d = highest_weight(a.p, m, n)?;
            table.push(vec![
                Cell::Int(u64::from(m)),
                Cell::Int(u64::from(n)),
                big_rat(&d.h),
                big_rat(&d.beta),
            ]);
        }
    }
    table.render(format, out)?;
    Ok(())
}

fn cmd_branch(a: &BranchArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let order = positive_order(a.order)?;
    let mut table = Table::new(
        Kind::Branch,
        Some(a.order),
        vec!["m", "n", "multiplicity", "h", "beta"],
    );
    let mut weights = Vec::new();
    for_each_weight_below(order, |m, n| weights.push((m, n)));
    weights.sort_by_key(|&(m, n)| (conformal_weight(m, n), m, n));
    for (m, n) in weights {
        let lambda = Weight::new(m, n);
        let multiplicity = match a.target {
            Target::W0 if lambda.in_root_lattice() => lie_a2::weight_zero_mult(lambda),
            Target::W0 => 0,
            Target::NSl2 => lie_a2::gl2_invariant_dim(lambda),
        };
        if multiplicity == 0 {
            continue;
        }
        let d = characters::highest_weight_p2(m, n);
        table.push(vec![
            Cell::Int(u64::from(m)),
            Cell::Int(u64::from(n)),
            Cell::Int(multiplicity),
            big_rat(&d.h),
            big_rat(&d.beta),
        ]);
    }
    table.render(format, out)?;
    Ok(())
}
