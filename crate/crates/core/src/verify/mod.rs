//! Cross-checks: brute-force oracles, sweeps over the identities satisfied by
//! the series, and the conjecture checkers.

mod conjectures;
mod oracles;
mod random;
mod theorems;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub use conjectures::{
    check_corolla_denominator, check_newton, check_newton_sweep, check_partition_conjecture,
    newton_expectation,
};
pub use oracles::{
    oracle_colorings, oracle_interpolate_pawn, oracle_min_vertex_cover, zeta_sum, OracleBounds,
};
pub use random::random_series;
pub use theorems::{
    check_bernoulli, check_classical_q1, check_oracle_agreement, check_theorem, check_zeta,
    CheckConfig, Theorem,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// Verdict of one check. A failing report always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: Map<String, Value>,
    pub status: Status,
    /// number of individual equalities tested
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates the outcome of a sweep; the first failure is kept as witness.
pub(crate) struct Sweep {
    name: String,
    params: Map<String, Value>,
    start: Instant,
    checked: usize,
    witness: Option<Value>,
    note: Option<String>,
    inconclusive: bool,
}

impl Sweep {
    pub(crate) fn new(name: &str, params: Value) -> Self {
        let params = match params {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Sweep {
            name: name.to_string(),
            params,
            start: Instant::now(),
            checked: 0,
            witness: None,
            note: None,
            inconclusive: false,
        }
    }

    /// Records one comparison; `witness` is only built on failure.
    pub(crate) fn expect(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub(crate) fn inconclusive(&mut self, note: impl Into<String>) {
        self.inconclusive = true;
        self.note = Some(note.into());
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub(crate) fn finish(self) -> CheckReport {
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.inconclusive {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        CheckReport {
            name: self.name,
            params: self.params,
            status,
            checked: self.checked,
            witness: self.witness,
            note: self.note,
            elapsed: self.start.elapsed(),
        }
    }
}
