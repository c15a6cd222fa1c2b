use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// An impossibility argument whose arithmetic was reproduced.
    #[serde(rename = "CONTRADICTION-CONFIRMED")]
    ContradictionConfirmed,
    /// A step argued geometrically that the toolkit does not compute.
    #[serde(rename = "NOT-MECHANIZED")]
    NotMechanized,
    /// Could not run within the configured enumeration bounds.
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ContradictionConfirmed => "CONTRADICTION-CONFIRMED",
            Status::NotMechanized => "NOT-MECHANIZED",
            Status::Skipped => "SKIPPED",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One step of a replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    /// The claim this step reproduces, in words.
    #[serde(rename = "paper_ref")]
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        claim: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
        status: Status,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            claim: claim.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            status,
        }
    }

    /// PASS iff the displayed forms of `expected` and `observed` agree.
    pub fn compare(
        id: impl Into<String>,
        description: impl Into<String>,
        claim: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let status = Status::from_bool(e == o);
        Self::new(id, description, claim, e, o, status)
    }

    pub fn skipped(id: impl Into<String>, description: impl Into<String>, claim: impl Into<String>, reason: impl fmt::Display) -> Self {
        Self::new(id, description, claim, "-", reason, Status::Skipped)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Run parameters echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub p: u64,
    pub n: u64,
    pub max_q: u64,
    pub curve_bound: u64,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub contradiction_confirmed: usize,
    pub not_mechanized: usize,
    pub skipped: usize,
    /// No mechanized step failed.
    pub ok: bool,
}

impl Summary {
    pub fn of(checks: &[Check]) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let fail = count(Status::Fail);
        Self {
            total: checks.len(),
            pass: count(Status::Pass),
            fail,
            contradiction_confirmed: count(Status::ContradictionConfirmed),
            not_mechanized: count(Status::NotMechanized),
            skipped: count(Status::Skipped),
            ok: fail == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub config: ReportConfig,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ReportConfig, checks: Vec<Check>) -> Self {
        let summary = Summary::of(&checks);
        Self { config, checks, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Fixed-width table for terminals.
    pub fn table(&self) -> String {
        let id_w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let st_w = self.checks.iter().map(|c| c.status.as_str().len()).max().unwrap_or(6).max(6);
        let mut out = format!("{:<id_w$}  {:<st_w$}  expected | observed\n", "id", "status");
        for c in &self.checks {
            out.push_str(&format!("{:<id_w$}  {:<st_w$}  {} | {}\n", c.id, c.status.as_str(), c.expected, c.observed));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} contradiction-confirmed, {} not mechanized, {} skipped\n",
            s.total, s.pass, s.fail, s.contradiction_confirmed, s.not_mechanized, s.skipped
        ));
        out
    }
}
