//! Built-in worked examples with expected verdicts, and the regression runner.

mod entries;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::checkers::{CheckReport, DecideOptions, Verdict};
use crate::error::Result;
use crate::exactlin::{Field, Vector};

pub use entries::catalog_entries;

/// What a check is expected to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Yes,
    /// `no_certified`, or `no_probabilistic` when no certificate is available.
    No,
    /// A property check that must succeed.
    Holds,
    /// A property check that must fail (a negative control).
    Fails,
}

/// Where an expected outcome comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "note", rename_all = "snake_case")]
pub enum Source {
    /// A published claim, paraphrased.
    Claim(&'static str),
    /// Established by an in-repo computation.
    Derived(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub check: &'static str,
    pub expected: Expected,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Verdict(Verdict),
    Holds(bool),
}

impl Outcome {
    fn label(&self) -> &'static str {
        match self {
            Outcome::Verdict(v) => v.as_str(),
            Outcome::Holds(true) => "holds",
            Outcome::Holds(false) => "fails",
        }
    }

    fn matches(&self, expected: Expected) -> bool {
        matches!(
            (self, expected),
            (Outcome::Verdict(Verdict::Yes), Expected::Yes)
                | (
                    Outcome::Verdict(Verdict::NoCertified | Verdict::NoProbabilistic),
                    Expected::No
                )
                | (Outcome::Holds(true), Expected::Holds)
                | (Outcome::Holds(false), Expected::Fails)
        )
    }
}

/// One computed result inside an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observation {
    pub check: &'static str,
    pub outcome: Outcome,
    pub witness: Option<Vector>,
    pub note: String,
}

impl Observation {
    pub fn verdict(check: &'static str, report: &CheckReport) -> Observation {
        let mut note = report.confidence_note.clone();
        if !report.is_consistent() {
            note = format!("{note}; {}", report.diagnostics.join("; "));
        }
        Observation {
            check,
            outcome: Outcome::Verdict(report.verdict),
            witness: report.witness.clone(),
            note,
        }
    }

    pub fn holds(check: &'static str, ok: bool, note: impl Into<String>) -> Observation {
        Observation {
            check,
            outcome: Outcome::Holds(ok),
            witness: None,
            note: note.into(),
        }
    }
}

pub type EntryRunner = fn(Field, &DecideOptions) -> Result<Vec<Observation>>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    /// The entry refuses to build in these characteristics.
    pub excluded_characteristics: &'static [u64],
    /// Built over this prime field whatever field the run asks for.
    pub fixed_prime: Option<u64>,
    pub expected: Vec<Expectation>,
    pub run: EntryRunner,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub entry: &'static str,
    pub check: &'static str,
    pub expected: Expected,
    pub got: Outcome,
    pub passed: bool,
    pub source: Source,
    pub witness: Option<Vector>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Notice {
    pub entry: &'static str,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressionSummary {
    pub field: String,
    pub seed: u64,
    pub budget: u64,
    pub records: Vec<CheckRecord>,
    pub skipped: Vec<Notice>,
    pub passed: bool,
}

impl RegressionSummary {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "catalog regression over {} (seed {}, budget {})",
            self.field, self.seed, self.budget
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{} {}/{}: expected {}, got {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.entry,
                r.check,
                expected_label(r.expected),
                r.got.label()
            );
        }
        for n in &self.skipped {
            let _ = writeln!(out, "SKIP {}: {}", n.entry, n.reason);
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} checks, {} failed, {} entries skipped",
            self.records.len(),
            failed,
            self.skipped.len()
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

fn expected_label(e: Expected) -> &'static str {
    match e {
        Expected::Yes => "yes",
        Expected::No => "no",
        Expected::Holds => "holds",
        Expected::Fails => "fails",
    }
}

fn run_entry(
    entry: &CatalogEntry,
    field: Field,
    opts: &DecideOptions,
) -> std::result::Result<Vec<CheckRecord>, Notice> {
    let field = match entry.fixed_prime {
        Some(p) => Field::prime(p).expect("catalog primes are prime"),
        None => field,
    };
    let p = field.characteristic();
    if entry.excluded_characteristics.contains(&p) {
        return Err(Notice {
            entry: entry.name,
            reason: format!("needs characteristic other than {p}"),
        });
    }
    let observations = match (entry.run)(field, opts) {
        Ok(obs) => obs,
        Err(e) => {
            return Ok(vec![CheckRecord {
                entry: entry.name,
                check: "build",
                expected: Expected::Holds,
                got: Outcome::Holds(false),
                passed: false,
                source: Source::Derived("every entry builds in the characteristics it accepts"),
                witness: None,
                note: e.to_string(),
            }])
        }
    };
    let mut records = Vec::new();
    for exp in &entry.expected {
        let record = match observations.iter().find(|o| o.check == exp.check) {
            Some(o) => CheckRecord {
                entry: entry.name,
                check: exp.check,
                expected: exp.expected,
                passed: o.outcome.matches(exp.expected),
                got: o.outcome.clone(),
                source: exp.source.clone(),
                witness: o.witness.clone(),
                note: o.note.clone(),
            },
            None => CheckRecord {
                entry: entry.name,
                check: exp.check,
                expected: exp.expected,
                got: Outcome::Holds(false),
                passed: false,
                source: exp.source.clone(),
                witness: None,
                note: "no observation recorded".into(),
            },
        };
        records.push(record);
    }
    for o in &observations {
        if !entry.expected.iter().any(|e| e.check == o.check) {
            records.push(CheckRecord {
                entry: entry.name,
                check: o.check,
                expected: Expected::Holds,
                got: o.outcome.clone(),
                passed: false,
                source: Source::Derived("every observation has an expectation"),
                witness: o.witness.clone(),
                note: "observation without expectation".into(),
            });
        }
    }
    Ok(records)
}

/// Runs every entry (concurrently) and collects records in entry-name order.
pub fn run_regression(field: Field, opts: &DecideOptions) -> RegressionSummary {
    let mut entries = catalog_entries();
    entries.sort_by_key(|e| e.name);
    let results: Vec<_> = entries
        .par_iter()
        .map(|e| run_entry(e, field, opts))
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(mut recs) => records.append(&mut recs),
            Err(n) => skipped.push(n),
        }
    }
    let passed = records.iter().all(|r| r.passed);
    RegressionSummary {
        field: field.to_string(),
        seed: opts.seed,
        budget: opts.budget,
        records,
        skipped,
        passed,
    }
}

/// Runs a single entry by name.
pub fn run_named(
    name: &str,
    field: Field,
    opts: &DecideOptions,
) -> Option<std::result::Result<Vec<CheckRecord>, Notice>> {
    catalog_entries()
        .iter()
        .find(|e| e.name == name)
        .map(|e| run_entry(e, field, opts))
}

#[cfg(test)]
mod tests;
