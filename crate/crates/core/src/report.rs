//! Outcome of an exact check.

use alloc::string::String;
use alloc::vec::Vec;

use crate::families::ParameterSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Too few usable indices to decide.
    Inconclusive,
    /// The check does not apply (degenerate input).
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::NotApplicable => "not_applicable",
        }
    }
}

/// A failing grid point; `x` is absent for checks indexed by degree only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Locus {
    pub i: i64,
    pub x: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub relation_id: String,
    pub params: Vec<ParameterSet>,
    pub status: Status,
    pub residual_locus: Vec<Locus>,
    /// Number of identities evaluated.
    pub checked: usize,
    pub detail: String,
}

impl VerificationReport {
    pub fn new(relation_id: impl Into<String>, params: Vec<ParameterSet>) -> Self {
        VerificationReport {
            relation_id: relation_id.into(),
            params,
            status: Status::Pass,
            residual_locus: Vec::new(),
            checked: 0,
            detail: String::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_status(mut self, status: Status, detail: impl Into<String>) -> Self {
        self.status = status;
        self.detail = detail.into();
        self
    }

    /// Records one evaluated identity; any failure flips the status.
    pub fn record(&mut self, ok: bool, at: Locus) {
        self.checked += 1;
        if !ok {
            self.status = Status::Fail;
            self.residual_locus.push(at);
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: &VerificationReport) {
        self.checked += other.checked;
        self.residual_locus.extend(other.residual_locus.iter().copied());
        if other.status != Status::Pass && self.status == Status::Pass {
            self.status = other.status;
            self.detail = other.detail.clone();
        }
    }
}
