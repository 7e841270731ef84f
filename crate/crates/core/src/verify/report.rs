use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Result of checking one identity at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    ExactEqual,
    NumericWithinTolerance { deviation: f64 },
    Mismatch { lhs: String, rhs: String },
    OutOfDomain { reason: String },
}

impl Outcome {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Outcome::Mismatch { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub params: BTreeMap<String, String>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl PointResult {
    pub fn new(params: &[(&str, String)], outcome: Outcome) -> Self {
        PointResult {
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            outcome,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Every grid point of one identity. Informational reports (conjectures)
/// never count toward failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub description: String,
    pub grid: String,
    pub informational: bool,
    pub points: Vec<PointResult>,
    pub duration_ms: u64,
}

impl IdentityReport {
    pub fn mismatches(&self) -> usize {
        self.points
            .iter()
            .filter(|p| p.outcome.is_mismatch())
            .count()
    }

    pub fn failed(&self) -> bool {
        !self.informational && self.mismatches() > 0
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.points.iter().filter(|p| pred(&p.outcome)).count()
    }
}
