//! The identity catalogue, verification campaigns and positivity scans.

mod catalogue;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{LaurentPoly, TruncatedSeries};

pub use catalogue::catalogue;
pub use oracle::partition_oracle;

/// Named integer parameters of one instance, kept sorted by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Params(pub BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    pub fn get(&self, key: &str) -> Result<i64> {
        self.0
            .get(key)
            .copied()
            .ok_or_else(|| Error::Domain(format!("missing parameter {key}")))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Poly(LaurentPoly),
    Series(TruncatedSeries),
}

impl From<LaurentPoly> for Value {
    fn from(p: LaurentPoly) -> Self {
        Value::Poly(p)
    }
}

impl From<TruncatedSeries> for Value {
    fn from(s: TruncatedSeries) -> Self {
        Value::Series(s)
    }
}

impl Value {
    fn coeff(&self, e: i64) -> BigInt {
        match self {
            Value::Poly(p) => p.coeff(e),
            Value::Series(s) => s.as_poly().coeff(e),
        }
    }
}

/// Lowest exponent where the two values differ. Series are compared up to
/// the smaller order, and a polynomial against a series only up to the
/// series order.
fn first_difference(lhs: &Value, rhs: &Value) -> Option<i64> {
    match (lhs, rhs) {
        (Value::Poly(a), Value::Poly(b)) => a.first_difference(b),
        (Value::Series(a), Value::Series(b)) => a.first_difference(b).map(i64::from),
        (Value::Poly(p), Value::Series(s)) | (Value::Series(s), Value::Poly(p)) => {
            let t = s.order() as i64;
            p.truncate_above(t).first_difference(&s.as_poly().truncate_above(t))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    Polynomial,
    Series,
    Positivity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thmmain,
    Thmmain2,
    Even,
    Corollaries,
    Series,
    Positivity,
    Section8,
    Comp,
    Hookp,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Thmmain,
        Suite::Thmmain2,
        Suite::Even,
        Suite::Corollaries,
        Suite::Series,
        Suite::Positivity,
        Suite::Section8,
        Suite::Comp,
        Suite::Hookp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Thmmain => "thmmain",
            Suite::Thmmain2 => "thmmain2",
            Suite::Even => "even",
            Suite::Corollaries => "corollaries",
            Suite::Series => "series",
            Suite::Positivity => "positivity",
            Suite::Section8 => "section8",
            Suite::Comp => "comp",
            Suite::Hookp => "hookp",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Grid sizes for a campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest `a` over coprime pairs.
    pub a_max: i64,
    /// Largest `L` in doubly bounded grids.
    pub l_max: i64,
    /// Largest `M` in doubly bounded grids.
    pub m_max: i64,
    /// Largest single index in one-parameter scans.
    pub n_max: i64,
    /// Series truncation order.
    pub order: u32,
    /// Largest box side for the partition enumeration.
    pub hook_max: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            a_max: 8,
            l_max: 8,
            m_max: 8,
            n_max: 12,
            order: 60,
            hook_max: 6,
        }
    }
}

pub type SideFn = Arc<dyn Fn(&Params) -> Result<Value> + Send + Sync>;
pub type GridFn = Arc<dyn Fn(&Budget) -> Vec<Params> + Send + Sync>;

/// An identity (or a positivity claim) together with the grid it is
/// checked on.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: String,
    /// The named result this case instantiates.
    pub source: String,
    pub suite: Suite,
    pub kind: CaseKind,
    /// Human-readable description of the parameter grid.
    pub domain: String,
    pub lhs: SideFn,
    /// Absent for positivity claims.
    pub rhs: Option<SideFn>,
    pub grid: GridFn,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl IdentityCase {
    pub fn identity(
        id: &str,
        source: &str,
        suite: Suite,
        domain: &str,
        lhs: impl Fn(&Params) -> Result<Value> + Send + Sync + 'static,
        rhs: impl Fn(&Params) -> Result<Value> + Send + Sync + 'static,
        grid: impl Fn(&Budget) -> Vec<Params> + Send + Sync + 'static,
    ) -> Self {
        IdentityCase {
            id: id.to_string(),
            source: source.to_string(),
            suite,
            kind: CaseKind::Polynomial,
            domain: domain.to_string(),
            lhs: Arc::new(lhs),
            rhs: Some(Arc::new(rhs)),
            grid: Arc::new(grid),
        }
    }

    pub fn series(mut self) -> Self {
        self.kind = CaseKind::Series;
        self
    }

    pub fn positivity(
        id: &str,
        source: &str,
        suite: Suite,
        domain: &str,
        poly: impl Fn(&Params) -> Result<Value> + Send + Sync + 'static,
        grid: impl Fn(&Budget) -> Vec<Params> + Send + Sync + 'static,
    ) -> Self {
        IdentityCase {
            id: id.to_string(),
            source: source.to_string(),
            suite,
            kind: CaseKind::Positivity,
            domain: domain.to_string(),
            lhs: Arc::new(poly),
            rhs: None,
            grid: Arc::new(grid),
        }
    }

    pub fn instances(&self, budget: &Budget) -> Vec<Params> {
        (self.grid)(budget)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The instance could not be evaluated; `error` says why.
    Error,
}

/// Outcome of one instance. A failure always names the first exponent at
/// which the sides differ (or, for positivity, the first negative one).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub case: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_diff_exponent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs_coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs_coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report without its timing, which is the part that must be
    /// reproducible.
    pub fn canonical(&self) -> VerifyReport {
        VerifyReport {
            elapsed_ms: None,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub nonneg: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_negative: Option<(i64, String)>,
}

pub fn positivity_scan(p: &LaurentPoly) -> PositivityReport {
    match p.first_negative() {
        None => PositivityReport {
            nonneg: true,
            first_negative: None,
        },
        Some((e, c)) => PositivityReport {
            nonneg: false,
            first_negative: Some((e, c.to_string())),
        },
    }
}

/// Evaluates both sides of `case` at `params` and compares them exactly.
pub fn check_identity(case: &IdentityCase, params: &Params) -> Result<VerifyReport> {
    let start = Instant::now();
    let lhs = (case.lhs)(params)?;
    let mut report = VerifyReport {
        case: case.id.clone(),
        params: params.clone(),
        status: Status::Pass,
        first_diff_exponent: None,
        lhs_coeff: None,
        rhs_coeff: None,
        error: None,
        elapsed_ms: None,
    };
    match &case.rhs {
        None => {
            let p = match &lhs {
                Value::Poly(p) => p,
                Value::Series(s) => s.as_poly(),
            };
            if let Some((e, c)) = positivity_scan(p).first_negative {
                report.status = Status::Fail;
                report.first_diff_exponent = Some(e);
                report.lhs_coeff = Some(c);
            }
        }
        Some(rhs) => {
            let rhs = rhs(params)?;
            if let Some(e) = first_difference(&lhs, &rhs) {
                report.status = Status::Fail;
                report.first_diff_exponent = Some(e);
                report.lhs_coeff = Some(lhs.coeff(e).to_string());
                report.rhs_coeff = Some(rhs.coeff(e).to_string());
            }
        }
    }
    report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

/// Runs every instance of the given cases in parallel. Evaluation errors
/// become `Status::Error` reports so the campaign always completes. The
/// result is sorted by case id and parameters.
pub fn run_cases(cases: &[IdentityCase], budget: &Budget) -> Vec<VerifyReport> {
    let jobs: Vec<(&IdentityCase, Params)> = cases
        .iter()
        .flat_map(|c| c.instances(budget).into_iter().map(move |p| (c, p)))
        .collect();
    let mut reports: Vec<VerifyReport> = jobs
        .into_par_iter()
        .map(|(case, params)| {
            check_identity(case, &params).unwrap_or_else(|e| VerifyReport {
                case: case.id.clone(),
                params,
                status: Status::Error,
                first_diff_exponent: None,
                lhs_coeff: None,
                rhs_coeff: None,
                error: Some(e.to_string()),
                elapsed_ms: None,
            })
        })
        .collect();
    reports.sort_by(|a, b| (&a.case, &a.params).cmp(&(&b.case, &b.params)));
    reports
}

pub fn cases_in(suite: Suite) -> Vec<IdentityCase> {
    catalogue().into_iter().filter(|c| c.suite == suite).collect()
}

pub fn run_campaign(suite: Suite, budget: &Budget) -> Vec<VerifyReport> {
    run_cases(&cases_in(suite), budget)
}

pub fn find_case(id: &str) -> Option<IdentityCase> {
    catalogue().into_iter().find(|c| c.id == id)
}
