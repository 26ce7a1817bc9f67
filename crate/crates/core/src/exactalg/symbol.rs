use std::fmt;

/// Generator kind. The ordering `X < H < HScalar < Y` is the normal order of
/// the monomial blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    X,
    H,
    /// The central scalar generator `h`.
    HScalar,
    Y,
}

/// A single generator occurrence. For `HScalar` the indices are unused and
/// stored as (0, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub kind: GenKind,
    pub row: u8,
    pub col: u8,
}

impl Symbol {
    pub fn x(row: u8, col: u8) -> Self {
        Symbol { kind: GenKind::X, row, col }
    }

    pub fn y(row: u8, col: u8) -> Self {
        Symbol { kind: GenKind::Y, row, col }
    }

    pub fn h(row: u8, col: u8) -> Self {
        Symbol { kind: GenKind::H, row, col }
    }

    pub fn h_scalar() -> Self {
        Symbol { kind: GenKind::HScalar, row: 0, col: 0 }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::X => write!(f, "X[{},{}]", self.row, self.col),
            GenKind::Y => write!(f, "Y[{},{}]", self.row, self.col),
            GenKind::H => write!(f, "H[{},{}]", self.row, self.col),
            GenKind::HScalar => write!(f, "h"),
        }
    }
}
