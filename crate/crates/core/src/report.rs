//! Verification reports.
//!
//! A report lists named checks with a status and a diagnostic. Timings are
//! kept in a separate field so that two runs on the same inputs serialize to
//! identical JSON once timings are dropped.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The computed value is self-consistent but differs from the displayed
    /// formula; reported, never counted as a failure.
    RecordedDiscrepancy,
}

impl CheckStatus {
    pub fn is_ok(self) -> bool {
        self != Self::Fail
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::RecordedDiscrepancy => "recorded-discrepancy",
        })
    }
}

/// What a check establishes; used to group checks into acceptance criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    Factorization,
    Certificate,
    NonStrong,
    Membership,
    Relation,
    Eigenvalue,
    Center,
    Sequence,
    Recurrence,
    Solver,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub group: Group,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, group: Group, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { name: name.into(), group, status, detail: if ok { String::new() } else { detail.into() } }
    }

    pub fn discrepancy(name: impl Into<String>, group: Group, detail: impl Into<String>) -> Self {
        Self { name: name.into(), group, status: CheckStatus::RecordedDiscrepancy, detail: detail.into() }
    }
}

/// Checks for one parameter sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    /// Parameter values as `p/q` literals, sorted by name.
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    /// Wall-clock seconds per sample, in sample order.
    pub samples: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub entry: String,
    pub version: String,
    pub degree_cap: usize,
    pub n_check: usize,
    pub samples: Vec<SampleReport>,
    #[serde(default)]
    pub timings: Timings,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(SampleReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&SampleReport, &Check)> {
        self.samples.iter().flat_map(|s| s.checks.iter().filter(|c| !c.status.is_ok()).map(move |c| (s, c)))
    }

    /// Pretty JSON including timings.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Pretty JSON with the timing field emptied.
    pub fn to_json_without_timings(&self) -> String {
        let mut r = self.clone();
        r.timings = Timings::default();
        r.to_json()
    }
}
