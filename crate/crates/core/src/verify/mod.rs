//! Identity registry and grid runner.
//!
//! Each identity is registered with a parameter grid and an evaluator that
//! computes both sides exactly and renders them canonically. A check passes
//! exactly when the two canonical strings coincide.

mod classical_ids;
mod q_ids;
mod registry;

pub use registry::{identity, registry, IdentitySpec};

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// Which identity group a registry entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Classical,
    Q,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Q => "q",
            Suite::All => "all",
        }
    }

    fn includes(self, group: Suite) -> bool {
        self == Suite::All || self == group
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "classical" => Ok(Suite::Classical),
            "q" => Ok(Suite::Q),
            "all" => Ok(Suite::All),
            _ => Err(format!(
                "unknown suite `{s}` (expected classical, q or all)"
            )),
        }
    }
}

/// Whether identities with known misprints are checked in corrected form or
/// exactly as usually typeset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Corrected,
    AsPrinted,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Corrected => "corrected",
            Mode::AsPrinted => "as_printed",
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "corrected" => Ok(Mode::Corrected),
            "as_printed" | "as-printed" => Ok(Mode::AsPrinted),
            _ => Err(format!(
                "unknown mode `{s}` (expected corrected or as_printed)"
            )),
        }
    }
}

/// A single parameter value: an integer or a selector such as a formula
/// variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Str(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Str(v.to_string())
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Str(s) => f.write_str(s),
        }
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Builds a parameter map from key/value pairs.
pub fn params<const N: usize>(kv: [(&str, ParamValue); N]) -> Params {
    kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn get_int(p: &Params, key: &str) -> Result<i64> {
    match p.get(key) {
        Some(ParamValue::Int(v)) => Ok(*v),
        _ => Err(Error::ParamsOutOfDomain {
            id: String::new(),
            reason: format!("missing integer parameter `{key}`"),
        }),
    }
}

pub(crate) fn get_usize(p: &Params, key: &str) -> Result<usize> {
    let v = get_int(p, key)?;
    usize::try_from(v).map_err(|_| Error::ParamsOutOfDomain {
        id: String::new(),
        reason: format!("parameter `{key}` = {v} must be non-negative"),
    })
}

pub(crate) fn get_str<'a>(p: &'a Params, key: &str) -> Result<&'a str> {
    match p.get(key) {
        Some(ParamValue::Str(s)) => Ok(s),
        _ => Err(Error::ParamsOutOfDomain {
            id: String::new(),
            reason: format!("missing selector `{key}`"),
        }),
    }
}

pub(crate) fn get_mode(p: &Params) -> Result<Mode> {
    get_str(p, "mode")?
        .parse()
        .map_err(|reason| Error::ParamsOutOfDomain {
            id: String::new(),
            reason,
        })
}

pub fn format_params(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Both sides of one evaluated identity instance.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Sides {
    pub lhs: String,
    pub rhs: String,
}

impl Sides {
    pub fn new(lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one identity instance.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub id: String,
    pub params: Params,
    pub passed: bool,
    pub lhs_canonical: String,
    pub rhs_canonical: String,
    pub elapsed: Duration,
}

/// Grid selection for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    #[serde(serialize_with = "ser_display")]
    pub suite: Suite,
    pub alpha_list: Vec<i64>,
    pub n_max: usize,
    #[serde(serialize_with = "ser_display")]
    pub mode: Mode,
}

fn ser_display<T: fmt::Display, S: Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl SuiteConfig {
    pub fn new(suite: Suite, alpha_list: Vec<i64>, n_max: usize, mode: Mode) -> Self {
        Self {
            suite,
            alpha_list,
            n_max,
            mode,
        }
    }
}

/// Aggregated outcome of a suite run. `failed` and `per_identity` are in
/// canonical `(id, params)` order.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub config: SuiteConfig,
    pub total: usize,
    pub passed: usize,
    pub failed: Vec<CheckResult>,
    /// `(checks run, checks passed)` per identity id.
    pub per_identity: BTreeMap<String, (usize, usize)>,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct FailedJson<'a> {
    id: &'a str,
    params: &'a Params,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    config: &'a SuiteConfig,
    total: usize,
    passed: usize,
    failed: Vec<FailedJson<'a>>,
    wall_ms: u128,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }

    /// JSON rendering. With `include_timing = false` the wall time is
    /// written as 0 so that repeated runs are byte-identical.
    pub fn to_json(&self, include_timing: bool) -> String {
        let doc = ReportJson {
            config: &self.config,
            total: self.total,
            passed: self.passed,
            failed: self
                .failed
                .iter()
                .map(|c| FailedJson {
                    id: &c.id,
                    params: &c.params,
                    lhs: &c.lhs_canonical,
                    rhs: &c.rhs_canonical,
                })
                .collect(),
            wall_ms: if include_timing {
                self.wall_time.as_millis()
            } else {
                0
            },
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    /// Human-readable summary: one line per identity, then failure details.
    pub fn to_text(&self, include_timing: bool) -> String {
        let mut out = String::new();
        for (id, (total, passed)) in &self.per_identity {
            let tag = if total == passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {id:<14} {passed}/{total}\n"));
        }
        for f in &self.failed {
            out.push_str(&format!(
                "failed {} [{}]\n  lhs: {}\n  rhs: {}\n",
                f.id,
                format_params(&f.params),
                f.lhs_canonical,
                f.rhs_canonical
            ));
        }
        out.push_str(&format!(
            "total {} passed {} failed {}",
            self.total,
            self.passed,
            self.failed.len()
        ));
        if include_timing {
            out.push_str(&format!(" wall_ms {}", self.wall_time.as_millis()));
        }
        out.push('\n');
        out
    }
}

fn evaluate(spec: &IdentitySpec, p: &Params) -> CheckResult {
    let start = Instant::now();
    let (passed, lhs, rhs) = match (spec.eval)(p) {
        Ok(s) => (s.lhs == s.rhs, s.lhs, s.rhs),
        Err(e) => (false, format!("error: {e}"), String::new()),
    };
    CheckResult {
        id: spec.id.to_string(),
        params: p.clone(),
        passed,
        lhs_canonical: lhs,
        rhs_canonical: rhs,
        elapsed: start.elapsed(),
    }
}

/// Evaluates one registered identity at one parameter point.
pub fn check_identity(id: &str, p: &Params) -> Result<CheckResult> {
    let spec = identity(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    spec.validate(p)?;
    Ok(evaluate(spec, p))
}

/// Runs every registered identity of the selected suite over its grid
/// intersected with `config`. Failures are data; nothing here aborts.
pub fn run_suite(config: &SuiteConfig) -> Report {
    let start = Instant::now();
    let tasks: Vec<(&IdentitySpec, Params)> = registry()
        .iter()
        .filter(|s| config.suite.includes(s.suite))
        .flat_map(|s| s.grid(config).into_iter().map(move |p| (s, p)))
        .collect();
    let mut results: Vec<CheckResult> = tasks.par_iter().map(|(s, p)| evaluate(s, p)).collect();
    results.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));

    let mut per_identity: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in &results {
        let e = per_identity.entry(r.id.clone()).or_default();
        e.0 += 1;
        if r.passed {
            e.1 += 1;
        }
    }
    let total = results.len();
    let failed: Vec<CheckResult> = results.into_iter().filter(|r| !r.passed).collect();
    Report {
        config: config.clone(),
        total,
        passed: total - failed.len(),
        failed,
        per_identity,
        wall_time: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_identity_examples() {
        let r = check_identity(
            "r4",
            &params([
                ("alpha", 1i64.into()),
                ("k", 2i64.into()),
                ("n", 2i64.into()),
            ]),
        )
        .unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs_canonical, "12");
        assert_eq!(r.rhs_canonical, "12");

        let qr2 = |mode: &str| {
            check_identity(
                "qr2",
                &params([
                    ("alpha", 1i64.into()),
                    ("k", 1i64.into()),
                    ("mode", mode.into()),
                    ("n", 1i64.into()),
                ]),
            )
            .unwrap()
        };
        let ok = qr2("corrected");
        assert!(ok.passed);
        assert_eq!(ok.lhs_canonical, "-q^-2 - q^-1");
        assert_eq!(ok.rhs_canonical, "-q^-2 - q^-1");
        let bad = qr2("as_printed");
        assert!(!bad.passed);
        assert_eq!(bad.lhs_canonical, "-q^-2 - q^-1");
        assert_eq!(bad.rhs_canonical, "-1 - q");
    }

    #[test]
    fn check_identity_errors() {
        assert_eq!(
            check_identity("nope", &Params::new()).unwrap_err(),
            Error::UnknownIdentity("nope".into())
        );
        let out = check_identity(
            "r4",
            &params([
                ("alpha", 1i64.into()),
                ("k", 1i64.into()),
                ("n", 2i64.into()),
            ]),
        );
        assert!(matches!(out, Err(Error::ParamsOutOfDomain { .. })));
        let out = check_identity(
            "r4",
            &params([
                ("alpha", 0i64.into()),
                ("k", 2i64.into()),
                ("n", 2i64.into()),
            ]),
        );
        assert!(matches!(out, Err(Error::ParamsOutOfDomain { .. })));
        let out = check_identity("r4", &params([("k", 2i64.into())]));
        assert!(matches!(out, Err(Error::ParamsOutOfDomain { .. })));
    }

    #[test]
    fn suites_and_modes_parse() {
        assert_eq!("q".parse::<Suite>().unwrap(), Suite::Q);
        assert!("x".parse::<Suite>().is_err());
        assert_eq!("as_printed".parse::<Mode>().unwrap(), Mode::AsPrinted);
        assert!("x".parse::<Mode>().is_err());
    }

    #[test]
    fn small_classical_suite_passes() {
        let r = run_suite(&SuiteConfig::new(
            Suite::Classical,
            vec![1],
            4,
            Mode::Corrected,
        ));
        assert!(r.all_passed(), "{}", r.to_text(false));
        assert_eq!(r.total, r.passed);
        assert!(r.total > 100);
    }

    #[test]
    fn as_printed_small_q_suite_flags_only_qr2() {
        let r = run_suite(&SuiteConfig::new(Suite::Q, vec![1], 2, Mode::AsPrinted));
        assert!(!r.failed.is_empty());
        for f in &r.failed {
            assert!(f.id == "qr2" || f.id == "qr2_1", "{}", f.id);
        }
        assert!(r.failed.iter().any(|f| f.id == "qr2"));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig::new(Suite::All, vec![1, 2], 3, Mode::AsPrinted);
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        assert_eq!(a.to_json(false), b.to_json(false));
        assert_eq!(a.to_text(false), b.to_text(false));
        let v: serde_json::Value = serde_json::from_str(&a.to_json(true)).unwrap();
        assert_eq!(v["total"].as_u64().unwrap() as usize, a.total);
        assert_eq!(v["config"]["suite"], "all");
        assert_eq!(v["config"]["mode"], "as_printed");
        assert!(v["failed"][0]["params"].is_object());
    }
}
