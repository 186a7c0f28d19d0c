//! Outcome of an exhaustive verifier scan.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing to scan: the claim holds vacuously.
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }

    /// Combines two scans of one claim: any failure wins, then any real pass.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Pass, _) | (_, Status::Pass) => Status::Pass,
            _ => Status::Vacuous,
        }
    }
}

/// The first counterexample in scan order, if any, and how many objects the
/// scan covered. A witness-free scan over zero objects is vacuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scan<W> {
    pub witness: Option<W>,
    pub scanned: u64,
}

impl<W> Scan<W> {
    pub fn status(&self) -> Status {
        match (&self.witness, self.scanned) {
            (Some(_), _) => Status::Fail,
            (None, 0) => Status::Vacuous,
            (None, _) => Status::Pass,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}
