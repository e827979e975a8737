//! Suite reports in human-readable and line-record form.
//!
//! The structured form has one record per line, fields separated by tabs,
//! each field `key=value`. The first line is the summary:
//!
//! ```text
//! record=suite  id=<id>  population=<n>  passed=<n>  failed=<n>
//! ```
//!
//! followed by one line per check:
//!
//! ```text
//! record=check  suite=<id>  check=<name>  subject=<inline>  result=pass|fail  detail=<text>
//! ```
//!
//! Wall time is left out so the output is byte-stable across runs.

use std::fmt::Write;
use std::time::Duration;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub check: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

impl Record {
    pub fn new(
        check: &str,
        subject: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Record {
            check: check.to_string(),
            subject: subject.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: String,
    pub population: usize,
    pub passed: usize,
    pub failed: usize,
    /// Subjects of failed checks, each once, in record order.
    pub counterexamples: Vec<String>,
    pub wall_time: Duration,
    pub records: Vec<Record>,
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

impl SuiteReport {
    pub fn new(id: &str, population: usize, records: Vec<Record>, wall_time: Duration) -> Self {
        let passed = records.iter().filter(|r| r.passed).count();
        let mut counterexamples: Vec<String> = Vec::new();
        for r in records.iter().filter(|r| !r.passed) {
            if !counterexamples.contains(&r.subject) {
                counterexamples.push(r.subject.clone());
            }
        }
        SuiteReport {
            id: id.to_string(),
            population,
            passed,
            failed: records.len() - passed,
            counterexamples,
            wall_time,
            records,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "suite {}: population {}, {} checks passed, {} failed ({:.2} s)\n",
            self.id,
            self.population,
            self.passed,
            self.failed,
            self.wall_time.as_secs_f64()
        );
        for r in self.records.iter().filter(|r| !r.passed) {
            let _ = writeln!(s, "  FAIL {} on {}: {}", r.check, r.subject, r.detail);
        }
        s
    }

    pub fn structured(&self) -> String {
        let mut s = format!(
            "record=suite\tid={}\tpopulation={}\tpassed={}\tfailed={}\n",
            self.id, self.population, self.passed, self.failed
        );
        for r in &self.records {
            let _ = writeln!(
                s,
                "record=check\tsuite={}\tcheck={}\tsubject={}\tresult={}\tdetail={}",
                self.id,
                clean(&r.check),
                clean(&r.subject),
                if r.passed { "pass" } else { "fail" },
                clean(&r.detail)
            );
        }
        s
    }
}
