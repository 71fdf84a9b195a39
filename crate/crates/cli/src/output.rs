//! The JSON report. Everything under `report` is canonical (byte-identical
//! for identical inputs); wall-clock timing lives beside it.

use std::time::Duration;

use hopfcalc::exact::Scalar;
use hopfcalc::homology::HomologyTable;
use hopfcalc::report::{Check, Report};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub basis: Vec<usize>,
    pub defect: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub status: &'static str,
    pub witness_count: usize,
    /// The first witnesses, in basis order of discovery.
    pub witnesses: Vec<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOut {
    pub fn from_check(check: &Check, limit: usize) -> Self {
        CheckOut {
            name: check.name.clone(),
            status: if check.passed { "pass" } else { "fail" },
            witness_count: check.witnesses.len(),
            witnesses: check
                .witnesses
                .iter()
                .take(limit)
                .map(|w| WitnessOut { basis: w.basis.clone(), defect: w.defect.entries().to_vec() })
                .collect(),
            note: check.note.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalReport {
    pub command: Value,
    pub passed: bool,
    pub checks: Vec<CheckOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyOut {
    pub calculus: HomologyTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cobar: Option<HomologyTable>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    report: &'a CanonicalReport,
    timing: Timing,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: f64,
}

pub struct ReportBuilder {
    command: Value,
    limit: usize,
    checks: Vec<CheckOut>,
    passed: bool,
    pub homology: Option<HomologyOut>,
    pub result: Option<Value>,
}

impl ReportBuilder {
    pub fn new(command: Value, limit: usize) -> Self {
        ReportBuilder { command, limit, checks: Vec::new(), passed: true, homology: None, result: None }
    }

    pub fn check(&mut self, check: &Check) {
        self.passed &= check.passed;
        self.checks.push(CheckOut::from_check(check, self.limit));
    }

    pub fn report(&mut self, report: &Report) {
        for c in &report.checks {
            self.check(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn finish(self) -> CanonicalReport {
        CanonicalReport {
            command: self.command,
            passed: self.passed,
            checks: self.checks,
            homology: self.homology,
            result: self.result,
        }
    }
}

pub fn canonical_json(report: &CanonicalReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

pub fn envelope_json(report: &CanonicalReport, elapsed: Duration) -> String {
    let env = Envelope { report, timing: Timing { elapsed_ms: elapsed.as_secs_f64() * 1e3 } };
    serde_json::to_string_pretty(&env).expect("reports serialize")
}
