//! Named identities between independently computed series, checked exactly.
//!
//! An [`Identity`] pairs two builders. Each builder returns a list of
//! [`Sample`]s (one per family member: a value of `s`, a grid point, an
//! `x`-power); the runner compares members pairwise and reports the first
//! exponent at which the two sides differ.

mod registry;

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qseries::Exponent;
use crate::QSeries;

pub use registry::registry;

/// Truncation order and family sizes shared by every builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub order: Exponent,
    /// `s = 0..=s_max` for the `N(2s)` families.
    pub s_max: u32,
    /// `s = 0..=affine_s_max` for affine constant terms.
    pub affine_s_max: u32,
    /// `m = 0..=coeff_x_max` for `x`-coefficient extraction.
    pub coeff_x_max: u32,
    /// `0 <= m, n <= t_grid` for the Weyl-sum check.
    pub t_grid: u32,
    pub hw_grid: u32,
    pub lie_grid: u32,
    pub gl2_grid: u32,
}

impl Settings {
    pub fn new(order: Exponent) -> Self {
        Settings {
            order,
            s_max: 6,
            affine_s_max: 4,
            coeff_x_max: 6,
            t_grid: 8,
            hw_grid: 20,
            lie_grid: 10,
            gl2_grid: 8,
        }
    }

    pub fn with_order(order: i64) -> Self {
        Self::new(Exponent::from_int(order))
    }

    fn validate(&self) -> Result<()> {
        if self.order < Exponent::from_int(1) {
            return Err(Error::InvalidOrder(self.order));
        }
        Ok(())
    }
}

/// One side's value for one family member.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Series(QSeries),
    Exact(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub member: String,
    pub value: Value,
}

impl Sample {
    pub fn series(member: impl Into<String>, series: QSeries) -> Self {
        Sample {
            member: member.into(),
            value: Value::Series(series),
        }
    }

    pub fn exact(member: impl Into<String>, value: BigRational) -> Self {
        Sample {
            member: member.into(),
            value: Value::Exact(value),
        }
    }

    pub fn integer(member: impl Into<String>, value: u64) -> Self {
        Self::exact(member, BigRational::from_integer(BigInt::from(value)))
    }
}

pub type Builder = Arc<dyn Fn(&Settings) -> Vec<Sample> + Send + Sync>;

/// Whether an identity is driven by the series order or by a finite grid.
#[derive(Clone, Copy)]
pub enum Scope {
    Order,
    Grid(fn(&Settings) -> u32),
}

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// The formula pair as it is usually written.
    pub anchor: &'static str,
    pub scope: Scope,
    /// Formula operations each side calls directly; the two lists are disjoint.
    pub lhs_ops: &'static [&'static str],
    pub rhs_ops: &'static [&'static str],
    pub lhs: Builder,
    pub rhs: Builder,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("lhs_ops", &self.lhs_ops)
            .field("rhs_ops", &self.rhs_ops)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportScope {
    Order(Exponent),
    Grid(u32),
}

/// First point where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub member: String,
    /// `None` for exact (non-series) values.
    pub exponent: Option<Exponent>,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub scope: ReportScope,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Equality ignoring timings.
    pub fn same_outcome(&self, other: &IdentityReport) -> bool {
        self.id == other.id
            && self.scope == other.scope
            && self.status == other.status
            && self.first_mismatch == other.first_mismatch
    }
}

fn int(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

/// Compares two series on `[lowest exponent, cutoff)`, treating an absent
/// term as zero.
fn first_series_mismatch(
    member: &str,
    lhs: &QSeries,
    rhs: &QSeries,
    cutoff: Exponent,
) -> Option<Mismatch> {
    let cutoff = cutoff.min(lhs.order()).min(rhs.order());
    let mut exponents: Vec<Exponent> = lhs
        .terms()
        .chain(rhs.terms())
        .map(|(e, _)| e)
        .filter(|e| *e < cutoff)
        .collect();
    exponents.sort();
    exponents.dedup();
    for e in exponents {
        let a = lhs.coeff(e).expect("below cutoff");
        let b = rhs.coeff(e).expect("below cutoff");
        if a != b {
            return Some(Mismatch {
                member: member.to_string(),
                exponent: Some(e),
                lhs: int(&a),
                rhs: int(&b),
            });
        }
    }
    None
}

fn first_mismatch(lhs: &[Sample], rhs: &[Sample], cutoff: Exponent) -> Option<Mismatch> {
    assert_eq!(
        lhs.len(),
        rhs.len(),
        "both sides enumerate the same members"
    );
    for (a, b) in lhs.iter().zip(rhs) {
        assert_eq!(a.member, b.member, "members are listed in the same order");
        let found = match (&a.value, &b.value) {
            (Value::Series(x), Value::Series(y)) => first_series_mismatch(&a.member, x, y, cutoff),
            (Value::Exact(x), Value::Exact(y)) => (x != y).then(|| Mismatch {
                member: a.member.clone(),
                exponent: None,
                lhs: x.clone(),
                rhs: y.clone(),
            }),
            _ => panic!("member {} has a series on one side only", a.member),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

impl Identity {
    pub fn run(&self, settings: &Settings) -> IdentityReport {
        let start = Instant::now();
        let lhs = (self.lhs)(settings);
        let rhs = (self.rhs)(settings);
        let first_mismatch = first_mismatch(&lhs, &rhs, settings.order);
        let scope = match self.scope {
            Scope::Order => ReportScope::Order(settings.order),
            Scope::Grid(size) => ReportScope::Grid(size(settings)),
        };
        IdentityReport {
            id: self.id.to_string(),
            scope,
            status: if first_mismatch.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_mismatch,
            elapsed: start.elapsed(),
        }
    }
}

pub fn find(id: &str) -> Result<Identity> {
    registry()
        .into_iter()
        .find(|identity| identity.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn run_identity(id: &str, order: Exponent) -> Result<IdentityReport> {
    run_identity_with(id, &Settings::new(order))
}

pub fn run_identity_with(id: &str, settings: &Settings) -> Result<IdentityReport> {
    settings.validate()?;
    Ok(find(id)?.run(settings))
}

pub fn run_all(order: Exponent) -> Result<Vec<IdentityReport>> {
    run_all_with(&Settings::new(order))
}

/// Runs every registered identity in parallel; reports follow registry order.
pub fn run_all_with(settings: &Settings) -> Result<Vec<IdentityReport>> {
    settings.validate()?;
    Ok(run_many(&registry(), settings))
}

/// Runs the selected ids (in the order given); unknown ids are rejected up front.
pub fn run_selected(ids: &[String], settings: &Settings) -> Result<Vec<IdentityReport>> {
    settings.validate()?;
    let identities = ids.iter().map(|id| find(id)).collect::<Result<Vec<_>>>()?;
    Ok(run_many(&identities, settings))
}

pub fn run_many(identities: &[Identity], settings: &Settings) -> Vec<IdentityReport> {
    identities
        .par_iter()
        .map(|identity| identity.run(settings))
        .collect()
}
