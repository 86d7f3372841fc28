//! Structured predicted-vs-observed results for a verification sweep.

use std::fmt;

use zqcodes::construct::CodeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One predicted-vs-observed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub check_name: String,
    pub spec: CodeSpec,
    pub predicted: String,
    pub observed: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// All entries of one sweep, sorted by (q, check name) so the rendering is
/// byte-identical run to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_entries(mut entries: Vec<CheckEntry>) -> Self {
        entries.sort_by(|a, b| {
            (a.spec.q, a.check_name.as_str()).cmp(&(b.spec.q, b.check_name.as_str()))
        });
        let total = entries.len();
        let passed = entries.iter().filter(|e| e.passed()).count();
        Self {
            entries,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            match entry.status {
                CheckStatus::Pass => writeln!(f, "[pass] q={} {}", entry.spec.q, entry.check_name)?,
                CheckStatus::Fail => writeln!(
                    f,
                    "[FAIL] q={} {}: {} (predicted {}, observed {})",
                    entry.spec.q, entry.check_name, entry.detail, entry.predicted, entry.observed
                )?,
            }
        }
        write!(
            f,
            "summary: total={} passed={} failed={}",
            self.summary.total, self.summary.passed, self.summary.failed
        )
    }
}
