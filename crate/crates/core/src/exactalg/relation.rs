use std::fmt;

use num::Zero;

use super::poly::NCPoly;
use super::symbol::{GenKind, Symbol};
use super::Rational;
use crate::error::{Error, Result};

/// Which of the two matrices carries the antisymmetry constraint in the
/// Howe-Umeda-Kostant-Sahi relation algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// The relation family: fixes matrix shapes, symmetry constraints and the
/// commutator template `[X[i,j], Y[k,l]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `X` is `n x m` with commuting entries, `Y` is `m x s`,
    /// `[X[i,j], Y[k,l]] = -delta(j,k) H[i,l]` with `H` an `n x s` matrix.
    Capelli { n: u8, m: u8, s: u8 },
    /// `X` is `n x n` symmetric with commuting entries, `Y` is `n x m`,
    /// `[X[i,j], Y[k,l]] = -(delta(i,k) H[j,l] + delta(j,k) H[i,l])`.
    TurnbullSym { n: u8, m: u8 },
    /// `X` is `n x n` antisymmetric with commuting entries, `Y` is `n x m`,
    /// `[X[i,j], Y[k,l]] = -(delta(i,k) H[j,l] - delta(j,k) H[i,l])`.
    TurnbullAnti { n: u8, m: u8 },
    /// `X`, `Y` are `n x n` with commuting entries, one of them
    /// antisymmetric, and
    /// `[X[i,j], Y[k,l]] = -h (delta(j,k) delta(i,l) - delta(i,k) delta(j,l))`
    /// with `h` central.
    Huks { n: u8, antisym: Side },
}

/// How the parameter matrix `H` is realized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HMode {
    /// `H[i,l]` is an independent central generator.
    Symbolic,
    /// `H` is the (rectangular) identity: `H[i,l] = delta(i,l)`.
    Identity,
    /// `H = h I` for the central scalar generator `h`.
    ScalarH,
    /// `H` is a fixed rational matrix.
    Numeric(Vec<Vec<Rational>>),
}

/// Symmetry constraint on a generator matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Symmetric,
    Antisymmetric,
}

/// A relation algebra: family plus the realization of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub family: Family,
    pub hmode: HMode,
}

impl fmt::Display for RelationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match &self.family {
            Family::Capelli { n, m, s } => format!("Capelli({n},{m},{s})"),
            Family::TurnbullSym { n, m } => format!("TurnbullSym({n},{m})"),
            Family::TurnbullAnti { n, m } => format!("TurnbullAnti({n},{m})"),
            Family::Huks { n, antisym: Side::X } => format!("HUKS({n},X-antisym)"),
            Family::Huks { n, antisym: Side::Y } => format!("HUKS({n},Y-antisym)"),
        };
        let hm = match &self.hmode {
            HMode::Symbolic => "symbolic",
            HMode::Identity => "identity",
            HMode::ScalarH => "scalar-h",
            HMode::Numeric(_) => "numeric",
        };
        write!(f, "{fam}/{hm}")
    }
}

impl RelationSpec {
    pub fn new(family: Family, hmode: HMode) -> Self {
        RelationSpec { family, hmode }
    }

    pub fn capelli(n: u8, m: u8, s: u8, hmode: HMode) -> Self {
        RelationSpec::new(Family::Capelli { n, m, s }, hmode)
    }

    pub fn turnbull_sym(n: u8, m: u8, hmode: HMode) -> Self {
        RelationSpec::new(Family::TurnbullSym { n, m }, hmode)
    }

    pub fn turnbull_anti(n: u8, m: u8, hmode: HMode) -> Self {
        RelationSpec::new(Family::TurnbullAnti { n, m }, hmode)
    }

    pub fn huks(n: u8, antisym: Side) -> Self {
        RelationSpec::new(Family::Huks { n, antisym }, HMode::ScalarH)
    }

    /// The Weyl algebra on `n x n` variables: the Capelli family at
    /// `n = m = s` with `H` the identity, realized by `x[i,j]` and
    /// `Y[k,l] = d/dx[l,k]`.
    pub fn weyl(n: u8) -> Self {
        RelationSpec::new(Family::Capelli { n, m: n, s: n }, HMode::Identity)
    }

    pub fn is_weyl(&self) -> bool {
        matches!(
            (&self.family, &self.hmode),
            (Family::Capelli { n, m, s }, HMode::Identity) if n == m && m == s
        )
    }

    /// (rows, cols) of the `X` matrix.
    pub fn x_dims(&self) -> (u8, u8) {
        match self.family {
            Family::Capelli { n, m, .. } => (n, m),
            Family::TurnbullSym { n, .. } | Family::TurnbullAnti { n, .. } => (n, n),
            Family::Huks { n, .. } => (n, n),
        }
    }

    /// (rows, cols) of the `Y` matrix.
    pub fn y_dims(&self) -> (u8, u8) {
        match self.family {
            Family::Capelli { m, s, .. } => (m, s),
            Family::TurnbullSym { n, m } | Family::TurnbullAnti { n, m } => (n, m),
            Family::Huks { n, .. } => (n, n),
        }
    }

    /// (rows, cols) of the `H` matrix; `h I_n` for the HUKS family.
    pub fn h_dims(&self) -> (u8, u8) {
        match self.family {
            Family::Capelli { n, s, .. } => (n, s),
            Family::TurnbullSym { n, m } | Family::TurnbullAnti { n, m } => (n, m),
            Family::Huks { n, .. } => (n, n),
        }
    }

    pub fn x_symmetry(&self) -> Symmetry {
        match self.family {
            Family::Capelli { .. } => Symmetry::None,
            Family::TurnbullSym { .. } => Symmetry::Symmetric,
            Family::TurnbullAnti { .. } => Symmetry::Antisymmetric,
            Family::Huks { antisym: Side::X, .. } => Symmetry::Antisymmetric,
            Family::Huks { antisym: Side::Y, .. } => Symmetry::None,
        }
    }

    pub fn y_symmetry(&self) -> Symmetry {
        match self.family {
            Family::Huks { antisym: Side::Y, .. } => Symmetry::Antisymmetric,
            _ => Symmetry::None,
        }
    }

    fn bounds_err(&self, sym: Symbol) -> Error {
        Error::OutOfBounds { symbol: sym.to_string(), family: self.to_string() }
    }

    /// Canonicalize a raw generator occurrence: bounds check, then resolve
    /// symmetric/antisymmetric representatives. Returns `None` when the
    /// generator is identically zero (antisymmetric diagonal).
    pub fn canonical(&self, sym: Symbol) -> Result<Option<(i8, Symbol)>> {
        let ((rows, cols), symmetry) = match sym.kind {
            GenKind::X => (self.x_dims(), self.x_symmetry()),
            GenKind::Y => (self.y_dims(), self.y_symmetry()),
            GenKind::H => {
                if matches!(self.family, Family::Huks { .. }) || self.hmode != HMode::Symbolic {
                    return Err(self.bounds_err(sym));
                }
                (self.h_dims(), Symmetry::None)
            }
            GenKind::HScalar => {
                let ok = matches!(self.family, Family::Huks { .. }) || self.hmode == HMode::ScalarH;
                if !ok {
                    return Err(self.bounds_err(sym));
                }
                return Ok(Some((1, sym)));
            }
        };
        if sym.row == 0 || sym.col == 0 || sym.row > rows || sym.col > cols {
            return Err(self.bounds_err(sym));
        }
        match symmetry {
            Symmetry::None => Ok(Some((1, sym))),
            Symmetry::Symmetric => {
                if sym.row <= sym.col {
                    Ok(Some((1, sym)))
                } else {
                    Ok(Some((1, Symbol { kind: sym.kind, row: sym.col, col: sym.row })))
                }
            }
            Symmetry::Antisymmetric => {
                if sym.row == sym.col {
                    Ok(None)
                } else if sym.row < sym.col {
                    Ok(Some((1, sym)))
                } else {
                    Ok(Some((-1, Symbol { kind: sym.kind, row: sym.col, col: sym.row })))
                }
            }
        }
    }

    /// `X[i,j]` as a polynomial (canonicalized).
    pub fn x_poly(&self, i: u8, j: u8) -> Result<NCPoly> {
        Ok(NCPoly::from_canonical(self.canonical(Symbol::x(i, j))?))
    }

    /// `Y[k,l]` as a polynomial (canonicalized).
    pub fn y_poly(&self, k: u8, l: u8) -> Result<NCPoly> {
        Ok(NCPoly::from_canonical(self.canonical(Symbol::y(k, l))?))
    }

    /// The entry `H[i,l]` under the current `hmode`.
    pub fn h_entry(&self, i: u8, l: u8) -> Result<NCPoly> {
        let (rows, cols) = self.h_dims();
        if i == 0 || l == 0 || i > rows || l > cols {
            return Err(self.bounds_err(Symbol::h(i, l)));
        }
        if matches!(self.family, Family::Huks { .. }) {
            // H = h I by the HUKS relation itself; hmode only fixes h.
            if i != l {
                return Ok(NCPoly::zero());
            }
            return Ok(self.h_scalar_value());
        }
        Ok(match &self.hmode {
            HMode::Symbolic => NCPoly::from_symbol(Symbol::h(i, l)),
            HMode::Identity => {
                if i == l {
                    NCPoly::one()
                } else {
                    NCPoly::zero()
                }
            }
            HMode::ScalarH => {
                if i == l {
                    NCPoly::from_symbol(Symbol::h_scalar())
                } else {
                    NCPoly::zero()
                }
            }
            HMode::Numeric(mat) => {
                let v = mat
                    .get(i as usize - 1)
                    .and_then(|r| r.get(l as usize - 1))
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                NCPoly::constant(v)
            }
        })
    }

    /// The central scalar `h` under the current `hmode` (HUKS family).
    pub fn h_scalar_value(&self) -> NCPoly {
        match &self.hmode {
            HMode::Symbolic | HMode::ScalarH => NCPoly::from_symbol(Symbol::h_scalar()),
            HMode::Identity => NCPoly::one(),
            HMode::Numeric(mat) => {
                let v = mat
                    .first()
                    .and_then(|r| r.first())
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                NCPoly::constant(v)
            }
        }
    }
}

/// The commutator `[X[i,j], Y[k,l]]` of the relation algebra, as a normal
/// form polynomial. Symbols are assumed canonical representatives.
pub fn commutator_of(spec: &RelationSpec, x: Symbol, y: Symbol) -> Result<NCPoly> {
    debug_assert_eq!(x.kind, GenKind::X);
    debug_assert_eq!(y.kind, GenKind::Y);
    let (i, j) = (x.row, x.col);
    let (k, l) = (y.row, y.col);
    let (xr, xc) = spec.x_dims();
    let (yr, yc) = spec.y_dims();
    if i == 0 || j == 0 || i > xr || j > xc {
        return Err(Error::OutOfBounds { symbol: x.to_string(), family: spec.to_string() });
    }
    if k == 0 || l == 0 || k > yr || l > yc {
        return Err(Error::OutOfBounds { symbol: y.to_string(), family: spec.to_string() });
    }
    let mut acc = NCPoly::zero();
    match spec.family {
        Family::Capelli { .. } => {
            if j == k {
                acc -= spec.h_entry(i, l)?;
            }
        }
        Family::TurnbullSym { .. } => {
            if i == k {
                acc -= spec.h_entry(j, l)?;
            }
            if j == k {
                acc -= spec.h_entry(i, l)?;
            }
        }
        Family::TurnbullAnti { .. } => {
            if i == k {
                acc -= spec.h_entry(j, l)?;
            }
            if j == k {
                acc += spec.h_entry(i, l)?;
            }
        }
        Family::Huks { .. } => {
            let h = spec.h_scalar_value();
            if j == k && i == l {
                acc -= h.clone();
            }
            if i == k && j == l {
                acc += h;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn capelli_commutator_matches_template() {
        let spec = RelationSpec::capelli(1, 1, 1, HMode::Symbolic);
        let c = commutator_of(&spec, Symbol::x(1, 1), Symbol::y(1, 1)).unwrap();
        let mut expect = NCPoly::from_symbol(Symbol::h(1, 1));
        expect = -expect;
        assert_eq!(c, expect);
    }

    #[test]
    fn turnbull_sym_doubles_on_diagonal() {
        // Both Kronecker deltas fire at i=j=k, giving -2 H[1,1].
        let spec = RelationSpec::turnbull_sym(2, 2, HMode::Symbolic);
        let c = commutator_of(&spec, Symbol::x(1, 1), Symbol::y(1, 1)).unwrap();
        let expect = NCPoly::from_symbol(Symbol::h(1, 1)).scaled(&rat(-2));
        assert_eq!(c, expect);
    }

    #[test]
    fn huks_commutator_vanishes_on_full_diagonal() {
        let spec = RelationSpec::huks(2, Side::Y);
        let c = commutator_of(&spec, Symbol::x(1, 1), Symbol::y(1, 1)).unwrap();
        assert!(c.is_zero());
        let c = commutator_of(&spec, Symbol::x(1, 2), Symbol::y(2, 1)).unwrap();
        // -h delta(2,2) delta(1,1) + h delta(1,2) delta(2,1) = -h
        let expect = -NCPoly::from_symbol(Symbol::h_scalar());
        assert_eq!(c, expect);
    }

    #[test]
    fn template_respects_symmetry_constraints() {
        // Symmetric X: swapping i and j leaves the template invariant.
        let spec = RelationSpec::turnbull_sym(3, 2, HMode::Symbolic);
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    for l in 1..=2u8 {
                        let a = commutator_of(&spec, Symbol::x(i, j), Symbol::y(k, l)).unwrap();
                        let b = commutator_of(&spec, Symbol::x(j, i), Symbol::y(k, l)).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
        // Antisymmetric X: swapping i and j negates; diagonal template is zero.
        let spec = RelationSpec::turnbull_anti(3, 2, HMode::Symbolic);
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    for l in 1..=2u8 {
                        let a = commutator_of(&spec, Symbol::x(i, j), Symbol::y(k, l)).unwrap();
                        let b = commutator_of(&spec, Symbol::x(j, i), Symbol::y(k, l)).unwrap();
                        assert_eq!(a, -b);
                        if i == j {
                            assert!(a.is_zero());
                        }
                    }
                }
            }
        }
        // Antisymmetric Y in the HUKS family: swapping k and l negates.
        let spec = RelationSpec::huks(3, Side::Y);
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                for k in 1..=3u8 {
                    for l in 1..=3u8 {
                        let a = commutator_of(&spec, Symbol::x(i, j), Symbol::y(k, l)).unwrap();
                        let b = commutator_of(&spec, Symbol::x(i, j), Symbol::y(l, k)).unwrap();
                        assert_eq!(a, -b);
                    }
                }
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        assert!(commutator_of(&spec, Symbol::x(3, 1), Symbol::y(1, 1)).is_err());
        assert!(spec.canonical(Symbol::y(1, 3)).is_err());
        assert!(spec.canonical(Symbol::x(0, 1)).is_err());
    }
}
