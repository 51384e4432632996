//! The aggregated verification report: every named check, run against the
//! embedded golden catalog.

mod catalog;
mod checks;

pub use catalog::Catalog;
pub use checks::CHECK_NAMES;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Premise,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    pub details: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub q: u32,
    pub checks: Vec<Check>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("unknown check {0:?}; known checks: {known}", known = CHECK_NAMES.join(", "))]
    UnknownCheck(String),
}

impl VerificationReport {
    pub fn new(q: u32, checks: Vec<Check>, verdict: &str) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            q,
            checks,
            verdict: verdict.into(),
        }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("hecke {} (q = {})\n", self.tool_version, self.q);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Premise => "PREMISE",
            };
            out.push_str(&format!("{tag:<8} {:<24} {}\n", c.check, c.anchor));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// All checks against the embedded catalog.
pub fn run_all() -> VerificationReport {
    run_with_catalog(&Catalog::embedded(), None).expect("no filter")
}

/// One check against the embedded catalog.
pub fn run_one(name: &str) -> Result<VerificationReport, ReportError> {
    run_with_catalog(&Catalog::embedded(), Some(name))
}

/// Runs all checks, or only `only`, against `catalog`. Checks run in
/// parallel; the report lists them in the fixed order of [`CHECK_NAMES`].
pub fn run_with_catalog(
    catalog: &Catalog,
    only: Option<&str>,
) -> Result<VerificationReport, ReportError> {
    let names: Vec<&str> = match only {
        Some(n) if CHECK_NAMES.contains(&n) => vec![n],
        Some(n) => return Err(ReportError::UnknownCheck(n.into())),
        None => CHECK_NAMES.to_vec(),
    };
    let ctx = checks::Context::new(catalog.clone());
    let results: Vec<Vec<Check>> = names.par_iter().map(|n| checks::run(&ctx, n)).collect();
    let checks: Vec<Check> = results.into_iter().flatten().collect();
    let verdict = if only.is_some() {
        if checks.iter().any(|c| c.status == Status::Fail) {
            "fail"
        } else {
            "pass"
        }
    } else if checks.iter().all(|c| c.status != Status::Fail) {
        crate::congruence::VERDICT_NOT_CONGRUENCE
    } else {
        crate::congruence::VERDICT_INCONCLUSIVE
    };
    Ok(VerificationReport::new(5, checks, verdict))
}

/// Only the non-congruence pipeline, with its own verdict.
pub fn prop52_report() -> VerificationReport {
    let ctx = checks::Context::new(Catalog::embedded());
    let checks = checks::run(&ctx, "prop52");
    let verdict = if checks.iter().all(|c| c.status != Status::Fail) {
        crate::congruence::VERDICT_NOT_CONGRUENCE
    } else {
        crate::congruence::VERDICT_INCONCLUSIVE
    };
    VerificationReport::new(5, checks, verdict)
}

/// The check's anchor, status and witnesses as readable text.
pub fn explain(name: &str) -> Result<String, ReportError> {
    let report = run_one(name)?;
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&format!("{}: {}\n", c.check, c.anchor));
        out.push_str(&format!("status: {:?}\n", c.status).to_lowercase());
        out.push_str(&serde_json::to_string_pretty(&c.details).expect("json"));
        out.push('\n');
    }
    Ok(out)
}
