//! Noncommutative polynomial ring with exact rational coefficients.
//!
//! Elements are linear combinations of normal-ordered monomials in matrix
//! generators `X[i,j]`, `Y[k,l]`, `H[i,l]` and a central scalar generator `h`.
//! The rewriting rules are parameterized by a [`RelationSpec`], one per
//! relation algebra (Capelli, Turnbull symmetric/antisymmetric,
//! Howe-Umeda-Kostant-Sahi, Weyl). All arithmetic is exact; there is no
//! floating point anywhere in this crate.
//!
//! Model restriction: `H` is taken central (it commutes with `X`, `Y`, `H`
//! and `h`). The hypotheses of every identity checked downstream only require
//! `[X, H] = 0`, so the central model is a genuine instance of each relation
//! algebra and every verified identity is an instance of the corresponding
//! theorem. Reports carry this note.

mod poly;
mod relation;
mod symbol;
mod weyl;

pub use poly::{multiply, normalize, Monomial, NCPoly};
pub use relation::{commutator_of, Family, HMode, RelationSpec, Side};
pub use symbol::{GenKind, Symbol};
pub use weyl::{apply_weyl, apply_word_weyl, XPoly};

use num::BigRational;

/// Exact rational scalar: arbitrary precision, always in lowest terms with
/// positive denominator (maintained by construction).
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = rat(1);
    for k in 2..=n as i64 {
        acc *= rat(k);
    }
    acc
}
