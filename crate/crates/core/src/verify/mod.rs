//! Theorem and lemma checkers: build both sides of each identity over the
//! appropriate relation algebra, reduce to canonical form, compare exactly,
//! and report a witness monomial on failure. Includes mutation-based
//! negative controls that must fail.

pub mod build;
pub mod checks;
pub mod registry;
pub mod report;
pub mod suite;

pub use registry::{catalog, find, run_check, CheckDef, ParamSpec, UsageError};
pub use report::{
    CheckReport, Ctx, Expectation, ResourceBounds, Status, TermCounts, Witness, WitnessLocation,
};
pub use suite::{default_grid, run_suite, CheckInstance, SuiteConfig, SuiteResult, Summary};
