//! JSON report types. Field order is the serialized key order.

use serde::{Deserialize, Serialize};

/// Matrix rows as scalar literals in the text-format syntax.
pub type Rows = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub seed: u64,
    pub trial_index: u64,
    pub p: Rows,
    pub q: Rows,
    /// Violated equation id, or a diagnostic for non-equation errors.
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub domain: String,
    pub dimension: usize,
    pub trials: u64,
    pub failures: Vec<TrialFailure>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub theorem: String,
    pub domain: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Campaign {
    pub pass: bool,
    pub entries: Vec<VerifyReport>,
    pub skipped: Vec<Skipped>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub p: String,
    pub q: String,
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub theorem: String,
    /// Pairs meeting the theorem's preconditions.
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub domain: String,
    pub dimension: usize,
    pub elements_compared: u64,
    pub mismatches: Vec<String>,
    pub idempotents: u64,
    pub idempotent_pairs: u64,
    /// Pairs with `(p+q)(p-q)^pi` nilpotent.
    pub sum_precondition_pairs: u64,
    pub tallies: Vec<TheoremTally>,
    pub failures: Vec<PairFailure>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub domain: String,
    pub values: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub cases: Vec<CaseReport>,
    pub pass: bool,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
