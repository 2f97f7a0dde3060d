//! Verification reports: one item per checked claim, with a witness for
//! every refutation.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub claim_id: String,
    /// The statement checked, in words.
    pub statement: String,
    pub status: Status,
    pub witness: Value,
    pub runtime_ms: u64,
    /// False when the outcome is decided here but not asserted by the theory.
    #[serde(default = "yes")]
    pub asserted: bool,
}

fn yes() -> bool {
    true
}

impl Claim {
    /// Time `check`; an error becomes a skipped item carrying its message.
    pub fn run(claim_id: &str, statement: &str, check: impl FnOnce() -> Result<(Status, Value)>) -> Claim {
        let start = Instant::now();
        let (status, witness) = match check() {
            Ok(r) => r,
            Err(e) => (Status::Skipped, json!({ "reason": e.to_string() })),
        };
        Claim {
            claim_id: claim_id.to_string(),
            statement: statement.to_string(),
            status,
            witness,
            runtime_ms: start.elapsed().as_millis() as u64,
            asserted: true,
        }
    }

    pub fn skipped(claim_id: &str, statement: &str, reason: impl Into<String>) -> Claim {
        Claim {
            claim_id: claim_id.to_string(),
            statement: statement.to_string(),
            status: Status::Skipped,
            witness: json!({ "reason": reason.into() }),
            runtime_ms: 0,
            asserted: true,
        }
    }

    pub fn unasserted(mut self) -> Claim {
        self.asserted = false;
        self
    }
}

/// `Verified` with `detail`, or `Refuted` with `witness`.
pub fn verdict(ok: bool, detail: Value, witness: Value) -> (Status, Value) {
    if ok {
        (Status::Verified, detail)
    } else {
        (Status::Refuted, witness)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Claim>,
    pub tool_version: String,
    pub config: Value,
}

impl Report {
    /// Items are ordered by `claim_id`.
    pub fn new(suite: &str, mut items: Vec<Claim>, config: Value) -> Report {
        items.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        Report { suite: suite.to_string(), items, tool_version: env!("CARGO_PKG_VERSION").to_string(), config }
    }

    pub fn get(&self, claim_id: &str) -> Option<&Claim> {
        self.items.iter().find(|c| c.claim_id == claim_id)
    }

    pub fn refuted(&self) -> impl Iterator<Item = &Claim> {
        self.items.iter().filter(|c| c.status == Status::Refuted)
    }
}
