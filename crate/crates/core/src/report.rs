use serde::Serialize;

use crate::exact::SparseVec;

/// A failing basis tuple together with its (nonzero) defect vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub defect: SparseVec,
}

/// Outcome of one named check. The witnesses list every basis tuple whose
/// defect is nonzero, so the full defect tensor is recoverable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witnesses: Vec::new(), note: None }
    }

    pub fn record(&mut self, basis: Vec<usize>, defect: SparseVec) {
        if !defect.is_zero() {
            self.passed = false;
            self.witnesses.push(Witness { basis, defect });
        }
    }

    pub fn fail(&mut self, basis: Vec<usize>, note: impl Into<String>) {
        self.passed = false;
        self.witnesses.push(Witness { basis, defect: SparseVec::new() });
        self.note.get_or_insert_with(|| note.into());
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
