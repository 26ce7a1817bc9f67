//! Exact-arithmetic kernel and verification harness for Capelli-type
//! identities: the Capelli identity for immanants, generalized Turnbull
//! identities for symmetric and antisymmetric matrices, the
//! Howe-Umeda-Kostant-Sahi identities, and the supporting Pfaffian and
//! tensor-operator lemmas.
//!
//! Everything is computed over the rationals in exact arithmetic; equality
//! of the two sides of an identity is equality of canonical normal forms.

pub mod error;
pub mod exactalg;
pub mod matfun;
pub mod symgroup;
pub mod tensorop;
pub mod verify;

pub use error::{Error, Result};
