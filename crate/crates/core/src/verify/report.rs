use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::exactalg::{Monomial, Rational};
use crate::symgroup::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The expected outcome of a check inside a suite. Mutation controls are
/// expected to fail; the suite succeeds when every check meets its
/// expectation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    #[default]
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLocation {
    /// Group-algebra component, in cycle notation, when the comparison is
    /// between group operators.
    pub sigma: Option<String>,
    pub out_index: Vec<u8>,
    pub in_index: Vec<u8>,
}

/// A concrete counterexample: one monomial whose coefficients differ on the
/// two sides, plus where in the operator it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs_coeff: String,
    pub rhs_coeff: String,
    pub location: Option<WitnessLocation>,
}

impl Witness {
    pub fn scalar(monomial: &Monomial, lhs: &Rational, rhs: &Rational) -> Self {
        Witness {
            monomial: monomial.to_string(),
            lhs_coeff: lhs.to_string(),
            rhs_coeff: rhs.to_string(),
            location: None,
        }
    }

    pub fn located(
        monomial: &Monomial,
        lhs: &Rational,
        rhs: &Rational,
        sigma: Option<&Permutation>,
        out_index: &[u8],
        in_index: &[u8],
    ) -> Self {
        Witness {
            monomial: monomial.to_string(),
            lhs_coeff: lhs.to_string(),
            rhs_coeff: rhs.to_string(),
            location: Some(WitnessLocation {
                sigma: sigma.map(|s| s.to_string()),
                out_index: out_index.to_vec(),
                in_index: in_index.to_vec(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct TermCounts {
    pub lhs: usize,
    pub rhs: usize,
}

/// Structured result of one identity check. `status == fail` if and only if
/// a witness is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub term_counts: TermCounts,
    pub elapsed_ms: u64,
    pub model_notes: Vec<String>,
    #[serde(default)]
    pub expected: Expectation,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether the outcome matches the expectation (skips never do, except
    /// that an expected-pass skip is reported separately by the suite).
    pub fn met_expectation(&self) -> bool {
        matches!(
            (self.expected, self.status),
            (Expectation::Pass, Status::Pass)
                | (Expectation::Pass, Status::Skipped)
                | (Expectation::Fail, Status::Fail)
        )
    }
}

pub const CENTRAL_H_NOTE: &str =
    "H modeled central: the model imposes [Y,H]=0 in addition to the required [X,H]=0; \
     every verified identity is an instance of the theorem in this model";

pub const COLUMN_DET_NOTE: &str =
    "det = column determinant: rows permuted, columns in natural order, products column 1 first";

/// Limits that turn a check into `skipped` instead of silently truncating.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceBounds {
    pub max_tensor_dim: usize,
    pub max_terms_per_side: usize,
    pub time_budget_ms: u64,
}

impl Default for ResourceBounds {
    fn default() -> Self {
        ResourceBounds {
            max_tensor_dim: 100_000,
            max_terms_per_side: 10_000_000,
            time_budget_ms: 600_000,
        }
    }
}

/// Accumulates one report: params, notes, timing.
pub struct Ctx {
    id: String,
    params: BTreeMap<String, String>,
    notes: Vec<String>,
    start: Instant,
}

impl Ctx {
    pub fn new(id: &str) -> Self {
        Ctx { id: id.to_string(), params: BTreeMap::new(), notes: Vec::new(), start: Instant::now() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    fn finish(self, status: Status, witness: Option<Witness>, counts: TermCounts) -> CheckReport {
        CheckReport {
            check_id: self.id,
            params: self.params,
            status,
            witness,
            term_counts: counts,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            model_notes: self.notes,
            expected: Expectation::Pass,
        }
    }

    pub fn pass(self, counts: TermCounts) -> CheckReport {
        self.finish(Status::Pass, None, counts)
    }

    pub fn fail(self, witness: Witness, counts: TermCounts) -> CheckReport {
        self.finish(Status::Fail, Some(witness), counts)
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> CheckReport {
        self.note(format!("skipped: {}", reason.into()));
        self.finish(Status::Skipped, None, TermCounts::default())
    }

    /// Resolve pass/fail from an optional witness.
    pub fn resolve(self, witness: Option<Witness>, counts: TermCounts) -> CheckReport {
        match witness {
            None => self.pass(counts),
            Some(w) => self.fail(w, counts),
        }
    }
}
