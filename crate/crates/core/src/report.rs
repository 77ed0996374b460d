//! Violation reports returned by the axiom validators.

use std::fmt;

use serde::Serialize;

/// Keep reports readable when a malformed table breaks an axiom everywhere.
const MAX_PER_CHECK: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
    /// Violations not listed individually, per check name.
    pub suppressed: usize,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty() && self.suppressed == 0
    }

    pub fn push(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        let check = check.into();
        let seen = self.violations.iter().filter(|v| v.check == check).count();
        if seen >= MAX_PER_CHECK {
            self.suppressed += 1;
            return;
        }
        self.violations.push(Violation {
            check,
            detail: detail.into(),
        });
    }

    /// Merges another report, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for v in other.violations {
            self.push(format!("{prefix}{}", v.check), v.detail);
        }
        self.suppressed += other.suppressed;
    }

    pub fn has(&self, check: &str) -> bool {
        self.violations.iter().any(|v| v.check == check)
    }

    pub fn mentions(&self, check: &str, needle: &str) -> bool {
        self.violations
            .iter()
            .any(|v| v.check == check && v.detail.contains(needle))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.check, v.detail)?;
        }
        if self.suppressed > 0 {
            writeln!(f, "... and {} more", self.suppressed)?;
        }
        Ok(())
    }
}
