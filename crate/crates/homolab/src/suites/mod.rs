//! The verification suites behind `verify <name>`: each runs a batch of
//! instances of one lemma/claim/identity and reports per-instance outcomes.
//! The acceptance tests and the CLI both drive these, so a green suite here
//! is exactly a green criterion there.

mod appendix;
mod engines;
mod lemmas;
mod lightcone;
mod local;
mod separation;
mod structure;

pub use appendix::{appendix_a_suite, appendix_b_suite, appendix_c_suite};
pub use engines::{cross_engine_suite, qecc_rdm_suite};
pub use lemmas::{comut_op_suite, coboundary_stabilizer_suite, encoder_for, large_b_suite};
pub use lightcone::{effective_support_suite, sausage_suite, support_in_balls_suite};
pub use local::{ball_bounds_suite, detour_suite, excision_suite, rsimple_profile};
pub use separation::{gamma_sep_connected_suite, separation_oracle_suite};
pub use structure::structure_suite;

use serde::Serialize;

/// One verified (or violated, or precondition-skipped) instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub fixture: String,
    pub params: String,
    pub outcome: Outcome,
    /// Compact witness description when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Verified,
    Violated,
    /// Preconditions did not hold; the instance does not count either way.
    Skipped,
}

/// Aggregated result of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub verified: usize,
    pub violated: usize,
    pub skipped: usize,
    pub records: Vec<InstanceRecord>,
}

impl SuiteOutcome {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteOutcome {
            suite: suite.into(),
            verified: 0,
            violated: 0,
            skipped: 0,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: InstanceRecord) {
        match record.outcome {
            Outcome::Verified => self.verified += 1,
            Outcome::Violated => self.violated += 1,
            Outcome::Skipped => self.skipped += 1,
        }
        self.records.push(record);
    }

    pub fn verified_here(&mut self, fixture: &str, params: impl Into<String>) {
        self.push(InstanceRecord {
            fixture: fixture.to_string(),
            params: params.into(),
            outcome: Outcome::Verified,
            witness: None,
        });
    }

    pub fn violated_here(
        &mut self,
        fixture: &str,
        params: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.push(InstanceRecord {
            fixture: fixture.to_string(),
            params: params.into(),
            outcome: Outcome::Violated,
            witness: Some(witness.into()),
        });
    }

    pub fn skipped_here(&mut self, fixture: &str, params: impl Into<String>, why: impl Into<String>) {
        self.push(InstanceRecord {
            fixture: fixture.to_string(),
            params: params.into(),
            outcome: Outcome::Skipped,
            witness: Some(why.into()),
        });
    }

    pub fn all_verified(&self) -> bool {
        self.violated == 0 && self.verified > 0
    }
}
