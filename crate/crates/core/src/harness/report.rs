use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::UniverseSpec;

/// Number of counterexamples kept per report; `failure_count` has the total.
pub(crate) const MAX_KEPT_FAILURES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub universe: UniverseSpec,
    pub passed: bool,
    pub instances: u64,
    pub cases: BTreeMap<String, u64>,
    pub failure_count: u64,
    /// The smallest counterexamples in sort order, at most 32 of them.
    pub failures: Vec<Counterexample>,
    /// Wall time. Left out of JSON so reports are reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn case(&self, name: &str) -> u64 {
        self.cases.get(name).copied().unwrap_or(0)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<20} [{}] instances={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.universe,
            self.instances
        )?;
        if !self.cases.is_empty() {
            let cases: Vec<_> = self.cases.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " cases: {}", cases.join(" "))?;
        }
        write!(f, " ({:.2}s)", self.elapsed.as_secs_f64())?;
        if self.failure_count > 0 {
            write!(f, "\n  {} failure(s)", self.failure_count)?;
            for c in &self.failures {
                write!(f, "\n  - inputs: {}; expected: {}; got: {}", c.inputs, c.expected, c.got)?;
            }
        }
        Ok(())
    }
}

/// Per-worker accumulator. Merging is associative and commutative, so any
/// split of the work gives the same final tally.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub cases: BTreeMap<&'static str, u64>,
    pub failure_count: u64,
    pub failures: Vec<Counterexample>,
}

impl Tally {
    /// Counts one instance; records a counterexample when `ok` is false.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.instances += 1;
        if !ok {
            self.fail(counterexample());
        }
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.failure_count += 1;
        self.failures.push(c);
        if self.failures.len() > 4 * MAX_KEPT_FAILURES {
            self.trim();
        }
    }

    pub fn case(&mut self, name: &'static str) {
        *self.cases.entry(name).or_insert(0) += 1;
    }

    fn trim(&mut self) {
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(MAX_KEPT_FAILURES);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        for (k, v) in other.cases {
            *self.cases.entry(k).or_insert(0) += v;
        }
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.trim();
        self
    }

    pub fn into_report(mut self, suite: &str, universe: UniverseSpec, elapsed: Duration) -> SuiteReport {
        self.trim();
        SuiteReport {
            suite: suite.to_owned(),
            universe,
            passed: self.failure_count == 0,
            instances: self.instances,
            cases: self.cases.into_iter().map(|(k, v)| (k.to_owned(), v)).collect(),
            failure_count: self.failure_count,
            failures: self.failures,
            elapsed,
        }
    }
}

pub(crate) fn cx(inputs: impl fmt::Display, expected: impl fmt::Display, got: impl fmt::Display) -> Counterexample {
    Counterexample { inputs: inputs.to_string(), expected: expected.to_string(), got: got.to_string() }
}
