//! Structured verdict records and their JSON wire format.
//!
//! Every battery entry and every CLI result serializes to the same shape:
//!
//! ```json
//! { "p": 7, "criterion": "criterion_sum", "params": {"d": 1, "mu": 3},
//!   "value": "6", "verdict": "criterion_holds" }
//! ```
//!
//! Values are decimal strings so arbitrary-precision results survive JSON
//! without loss.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Verdict of one criterion evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A certifying value was nonzero: the criterion holds (for a
    /// t-battery entry this means "t is excluded").
    CriterionHolds,
    /// The certifying value vanished; nothing follows either way.
    Inconclusive,
    /// An identity asserted unconditionally failed to hold.
    ViolatedExpectation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CriterionHolds => "criterion_holds",
            Verdict::Inconclusive => "inconclusive",
            Verdict::ViolatedExpectation => "violated_expectation",
        }
    }
}

/// One criterion evaluation: id, parameters, value, verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub p: u64,
    pub criterion: String,
    pub params: BTreeMap<String, i64>,
    pub value: String,
    pub verdict: Verdict,
}

impl CriterionReport {
    /// Entry whose nonzero value certifies the criterion.
    pub fn certifying(
        p: u64,
        criterion: &str,
        params: impl IntoIterator<Item = (&'static str, i64)>,
        value: u64,
    ) -> CriterionReport {
        CriterionReport {
            p,
            criterion: criterion.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value: value.to_string(),
            verdict: if value != 0 {
                Verdict::CriterionHolds
            } else {
                Verdict::Inconclusive
            },
        }
    }

    /// Entry checking an identity that must hold unconditionally; a nonzero
    /// residual is a violated expectation.
    pub fn identity(
        p: u64,
        criterion: &str,
        params: impl IntoIterator<Item = (&'static str, i64)>,
        residual: u64,
    ) -> CriterionReport {
        CriterionReport {
            p,
            criterion: criterion.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value: residual.to_string(),
            verdict: if residual == 0 {
                Verdict::Inconclusive
            } else {
                Verdict::ViolatedExpectation
            },
        }
    }

    /// Informational entry: value reported, no claim attached.
    pub fn statistic(
        p: u64,
        criterion: &str,
        params: impl IntoIterator<Item = (&'static str, i64)>,
        value: impl ToString,
    ) -> CriterionReport {
        CriterionReport {
            p,
            criterion: criterion.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            value: value.to_string(),
            verdict: Verdict::Inconclusive,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::CriterionHolds
    }
}
