use std::fmt::Display;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::sample::trial_rng;
use rand_chacha::ChaCha8Rng;

/// Failures kept verbatim per suite; the rest are only counted.
pub const MAX_RECORDED: usize = 20;

/// A violated identity with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Tally {
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(failure);
        }
    }

    pub fn check_eq<T: PartialEq + Display>(&mut self, check: &str, lhs: &T, rhs: &T, inputs: impl FnOnce() -> Value) {
        self.checks += 1;
        if lhs != rhs {
            self.record(Failure {
                check: check.into(),
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// A boolean identity; `detail` describes the offending value.
    pub fn holds(&mut self, check: &str, ok: bool, inputs: impl FnOnce() -> Value, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.record(Failure {
                check: check.into(),
                inputs: inputs(),
                lhs: detail(),
                rhs: "true".into(),
            });
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        let room = MAX_RECORDED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Runs `f` on every item in parallel; results are merged in item order.
pub fn sweep<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect();
    let mut out = Tally::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Runs `trials` seeded trials in parallel; trial `i` gets stream `i`.
pub fn trials(seed: u64, count: u64, f: impl Fn(&mut ChaCha8Rng, u64, &mut Tally) + Sync) -> Tally {
    let indices: Vec<u64> = (0..count).collect();
    sweep(&indices, |&i, t| f(&mut trial_rng(seed, i), i, t))
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub max_index: u64,
    pub checks: u64,
    pub pass: bool,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
