use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};

use super::relation::{commutator_of, RelationSpec};
use super::symbol::{GenKind, Symbol};
use super::Rational;
use crate::error::Result;

/// A normal-ordered word: all `X` generators, then all `H` generators and a
/// power of `h`, then all `Y` generators, each block sorted by (row, col).
/// The empty monomial is the ring unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    xs: Vec<(u8, u8)>,
    hs: Vec<(u8, u8)>,
    hpow: u32,
    ys: Vec<(u8, u8)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn from_symbol(sym: Symbol) -> Self {
        let mut m = Monomial::unit();
        m.push_central_or_y(sym);
        m
    }

    pub fn degree(&self) -> usize {
        self.xs.len() + self.hs.len() + self.hpow as usize + self.ys.len()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    pub fn x_block(&self) -> &[(u8, u8)] {
        &self.xs
    }

    pub fn h_block(&self) -> &[(u8, u8)] {
        &self.hs
    }

    pub fn h_power(&self) -> u32 {
        self.hpow
    }

    pub fn y_block(&self) -> &[(u8, u8)] {
        &self.ys
    }

    /// Kinds of generators occurring in this monomial.
    pub fn kinds(&self) -> impl Iterator<Item = GenKind> + '_ {
        let x = (!self.xs.is_empty()).then_some(GenKind::X);
        let h = (!self.hs.is_empty()).then_some(GenKind::H);
        let hs = (self.hpow > 0).then_some(GenKind::HScalar);
        let y = (!self.ys.is_empty()).then_some(GenKind::Y);
        [x, h, hs, y].into_iter().flatten()
    }

    /// The monomial as a generator word in normal order.
    pub fn word(&self) -> Vec<Symbol> {
        let mut w = Vec::with_capacity(self.degree());
        w.extend(self.xs.iter().map(|&(r, c)| Symbol::x(r, c)));
        w.extend(self.hs.iter().map(|&(r, c)| Symbol::h(r, c)));
        w.extend((0..self.hpow).map(|_| Symbol::h_scalar()));
        w.extend(self.ys.iter().map(|&(r, c)| Symbol::y(r, c)));
        w
    }

    fn push_central_or_y(&mut self, sym: Symbol) {
        match sym.kind {
            GenKind::X => {
                debug_assert!(self.ys.is_empty());
                insert_sorted(&mut self.xs, (sym.row, sym.col));
            }
            GenKind::H => insert_sorted(&mut self.hs, (sym.row, sym.col)),
            GenKind::HScalar => self.hpow += 1,
            GenKind::Y => insert_sorted(&mut self.ys, (sym.row, sym.col)),
        }
    }

    /// Merge the central part (H block and h power) of `other`; `other` must
    /// contain no X or Y generators.
    fn merge_central(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.xs.is_empty() && other.ys.is_empty());
        let mut m = self.clone();
        for &hsym in &other.hs {
            insert_sorted(&mut m.hs, hsym);
        }
        m.hpow += other.hpow;
        m
    }

    fn without_last_y(&self) -> (Monomial, (u8, u8)) {
        let mut m = self.clone();
        let y = m.ys.pop().expect("monomial has a Y block");
        (m, y)
    }
}

fn insert_sorted(v: &mut Vec<(u8, u8)>, item: (u8, u8)) {
    let pos = v.partition_point(|e| *e <= item);
    v.insert(pos, item);
}

fn merge_sorted(a: &[(u8, u8)], b: &[(u8, u8)]) -> Vec<(u8, u8)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn merge_sorted3(a: &[(u8, u8)], b: &[(u8, u8)], c: &[(u8, u8)]) -> Vec<(u8, u8)> {
    merge_sorted(&merge_sorted(a, b), c)
}

/// Normal form of the crossing word (Y block) * (X block): the only place
/// the rewriting rule acts.
fn cross_yx(ys: &[(u8, u8)], xs: &[(u8, u8)], spec: &RelationSpec) -> Result<NCPoly> {
    let mut acc = NCPoly::zero();
    acc.add_term(
        Monomial { xs: Vec::new(), hs: Vec::new(), hpow: 0, ys: ys.to_vec() },
        Rational::one(),
    );
    for &(r, c) in xs {
        acc = acc.mul_symbol(Symbol::x(r, c), spec)?;
    }
    Ok(acc)
}

/// Graded order, then lexicographic block-by-block. This is the canonical
/// term order used for display and report serialization.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.xs.cmp(&other.xs))
            .then_with(|| self.hs.cmp(&other.hs))
            .then_with(|| self.hpow.cmp(&other.hpow))
            .then_with(|| self.ys.cmp(&other.ys))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        let run = |syms: &[(u8, u8)], tag: char, parts: &mut Vec<String>| {
            let mut i = 0;
            while i < syms.len() {
                let mut j = i + 1;
                while j < syms.len() && syms[j] == syms[i] {
                    j += 1;
                }
                let (r, c) = syms[i];
                if j - i == 1 {
                    parts.push(format!("{tag}[{r},{c}]"));
                } else {
                    parts.push(format!("{tag}[{r},{c}]^{}", j - i));
                }
                i = j;
            }
        };
        run(&self.xs, 'X', &mut parts);
        run(&self.hs, 'H', &mut parts);
        if self.hpow == 1 {
            parts.push("h".to_string());
        } else if self.hpow > 1 {
            parts.push(format!("h^{}", self.hpow));
        }
        run(&self.ys, 'Y', &mut parts);
        write!(f, "{}", parts.join("*"))
    }
}

/// Exact-rational linear combination of normal-ordered monomials. Zero
/// coefficients are never stored, so structural equality is canonical-form
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    /// A single canonical generator. `X` symbols only form a valid monomial
    /// on their own; words are built through [`normalize`].
    pub fn from_symbol(sym: Symbol) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(Monomial::from_symbol(sym), Rational::one());
        p
    }

    pub(crate) fn from_canonical(canonical: Option<(i8, Symbol)>) -> Self {
        match canonical {
            None => NCPoly::zero(),
            Some((sign, sym)) => {
                let mut p = NCPoly::from_symbol(sym);
                if sign < 0 {
                    p = -p;
                }
                p
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        let mut p = NCPoly::zero();
        for (m, a) in &self.terms {
            p.terms.insert(m.clone(), a * c);
        }
        p
    }

    /// Total degree (maximum over terms); zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// First monomial (in canonical order) where the two polynomials differ,
    /// with both coefficients.
    pub fn first_diff(&self, other: &NCPoly) -> Option<(Monomial, Rational, Rational)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.coefficient(k);
            let b = other.coefficient(k);
            if a != b {
                return Some((k.clone(), a, b));
            }
        }
        None
    }

    /// Right-multiply by a single canonical symbol, rewriting to normal form.
    fn mul_symbol(&self, sym: Symbol, spec: &RelationSpec) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            match sym.kind {
                GenKind::X => {
                    let moved = mono_mul_x(m, sym, spec)?;
                    for (mm, cc) in moved.terms {
                        out.add_term(mm, cc * c);
                    }
                }
                _ => {
                    let mut mm = m.clone();
                    mm.push_central_or_y(sym);
                    out.add_term(mm, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// The coefficient when the polynomial is a single constant term.
    fn as_constant(&self) -> Option<&Rational> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            if m.is_unit() {
                return Some(c);
            }
        }
        None
    }

    /// Multiply without re-validating operands; callers guarantee both were
    /// built over `spec`.
    pub(crate) fn mul_unchecked(&self, rhs: &NCPoly, spec: &RelationSpec) -> Result<NCPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(NCPoly::zero());
        }
        // Scalar factors need no reordering.
        if let Some(c) = self.as_constant() {
            return Ok(rhs.scaled(c));
        }
        if let Some(c) = rhs.as_constant() {
            return Ok(self.scaled(c));
        }
        // Only the left factor's Y block and the right factor's X block
        // interact; everything else merges block-wise. Distinct crossings
        // are shared across term pairs.
        let mut cross_cache: std::collections::HashMap<
            (Vec<(u8, u8)>, Vec<(u8, u8)>),
            NCPoly,
        > = std::collections::HashMap::new();
        let mut out = NCPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let key = (ma.ys.clone(), mb.xs.clone());
                let crossed = match cross_cache.get(&key) {
                    Some(c) => c,
                    None => {
                        let c = cross_yx(&key.0, &key.1, spec)?;
                        cross_cache.entry(key).or_insert(c)
                    }
                };
                let coeff = ca * cb;
                for (mc, cc) in &crossed.terms {
                    let merged = Monomial {
                        xs: merge_sorted(&ma.xs, &mc.xs),
                        hs: merge_sorted3(&ma.hs, &mc.hs, &mb.hs),
                        hpow: ma.hpow + mc.hpow + mb.hpow,
                        ys: merge_sorted(&mc.ys, &mb.ys),
                    };
                    out.add_term(merged, &coeff * cc);
                }
            }
        }
        Ok(out)
    }

    /// Validate that every generator in every term is a canonical in-bounds
    /// symbol for `spec`.
    pub fn validate(&self, spec: &RelationSpec) -> Result<()> {
        for m in self.terms.keys() {
            for sym in m.word() {
                match spec.canonical(sym)? {
                    Some((1, s)) if s == sym => {}
                    _ => {
                        return Err(crate::error::Error::SpecMismatch(format!(
                            "{sym} is not a canonical generator of {spec}"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// `Y[a,b] * X[i,j] = X[i,j] * Y[a,b] - [X, Y]`, applied recursively to move
/// one `X` left through the whole Y block. The correction terms are central,
/// so they merge directly.
fn mono_mul_x(m: &Monomial, x: Symbol, spec: &RelationSpec) -> Result<NCPoly> {
    if m.ys.is_empty() {
        let mut mm = m.clone();
        mm.push_central_or_y(x);
        let mut p = NCPoly::zero();
        p.add_term(mm, Rational::one());
        return Ok(p);
    }
    let (head, (yr, yc)) = m.without_last_y();
    let y = Symbol::y(yr, yc);
    let mut out = NCPoly::zero();
    // (head * X) * Y
    for (mm, cc) in mono_mul_x(&head, x, spec)?.terms {
        let mut my = mm;
        my.push_central_or_y(y);
        out.add_term(my, cc);
    }
    // - head * [X, Y]
    let com = commutator_of(spec, x, y)?;
    for (cm, cc) in com.terms {
        out.add_term(head.merge_central(&cm), -cc);
    }
    Ok(out)
}

/// Normal form of a coefficient times a word of raw generator symbols.
/// Symmetric and antisymmetric representatives are resolved with their signs;
/// an antisymmetric diagonal generator annihilates the whole term.
pub fn normalize(word: &[Symbol], coeff: Rational, spec: &RelationSpec) -> Result<NCPoly> {
    let mut sign = Rational::one();
    let mut canonical = Vec::with_capacity(word.len());
    for &sym in word {
        match spec.canonical(sym)? {
            None => return Ok(NCPoly::zero()),
            Some((s, c)) => {
                if s < 0 {
                    sign = -sign;
                }
                canonical.push(c);
            }
        }
    }
    let mut acc = NCPoly::constant(coeff * sign);
    for sym in canonical {
        acc = acc.mul_symbol(sym, spec)?;
    }
    Ok(acc)
}

/// Product of two normal-form polynomials over the same relation algebra.
/// The operands are validated against `spec`; use this at API boundaries.
pub fn multiply(p: &NCPoly, q: &NCPoly, spec: &RelationSpec) -> Result<NCPoly> {
    p.validate(spec)?;
    q.validate(spec)?;
    p.mul_unchecked(q, spec)
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(mut self, rhs: NCPoly) -> NCPoly {
        self += rhs;
        self
    }
}

impl AddAssign for NCPoly {
    fn add_assign(&mut self, rhs: NCPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(mut self, rhs: NCPoly) -> NCPoly {
        self -= rhs;
        self
    }
}

impl SubAssign for NCPoly {
    fn sub_assign(&mut self, rhs: NCPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        let mut p = NCPoly::zero();
        for (m, c) in self.terms {
            p.terms.insert(m, -c);
        }
        p
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::relation::{HMode, RelationSpec};
    use super::super::{rat, ratio};
    use super::*;

    fn cap111() -> RelationSpec {
        RelationSpec::capelli(1, 1, 1, HMode::Symbolic)
    }

    #[test]
    fn normalize_single_swap() {
        // Y[1,1] X[1,1] -> X[1,1] Y[1,1] + H[1,1]
        let spec = cap111();
        let p = normalize(&[Symbol::y(1, 1), Symbol::x(1, 1)], rat(1), &spec).unwrap();
        let expect = normalize(&[Symbol::x(1, 1), Symbol::y(1, 1)], rat(1), &spec).unwrap()
            + NCPoly::from_symbol(Symbol::h(1, 1));
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "H[1,1] + X[1,1]*Y[1,1]");
    }

    #[test]
    fn x_generators_commute_and_sort() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let a = normalize(&[Symbol::x(1, 2), Symbol::x(1, 1)], rat(1), &spec).unwrap();
        let b = normalize(&[Symbol::x(1, 1), Symbol::x(1, 2)], rat(1), &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.term_count(), 1);
    }

    #[test]
    fn weyl_normal_order_matches_leibniz() {
        // d x x = x x d + 2 x in the rank-one Weyl algebra.
        let spec = RelationSpec::weyl(1);
        let p = normalize(
            &[Symbol::y(1, 1), Symbol::x(1, 1), Symbol::x(1, 1)],
            rat(1),
            &spec,
        )
        .unwrap();
        let mut expect =
            normalize(&[Symbol::x(1, 1), Symbol::x(1, 1), Symbol::y(1, 1)], rat(1), &spec)
                .unwrap();
        expect += NCPoly::from_symbol(Symbol::x(1, 1)).scaled(&rat(2));
        assert_eq!(p, expect);
    }

    #[test]
    fn associativity_witness() {
        // (Y X) X = Y (X X) = X^2 Y + 2 H X over Capelli(1,1,1).
        let spec = cap111();
        let x = NCPoly::from_symbol(Symbol::x(1, 1));
        let y = NCPoly::from_symbol(Symbol::y(1, 1));
        let yx = multiply(&y, &x, &spec).unwrap();
        let left = multiply(&yx, &x, &spec).unwrap();
        let xx = multiply(&x, &x, &spec).unwrap();
        let right = multiply(&y, &xx, &spec).unwrap();
        assert_eq!(left, right);
        let mut expect =
            normalize(&[Symbol::x(1, 1), Symbol::x(1, 1), Symbol::y(1, 1)], rat(1), &spec)
                .unwrap();
        expect += normalize(&[Symbol::h(1, 1), Symbol::x(1, 1)], rat(2), &spec).unwrap();
        assert_eq!(left, expect);
    }

    #[test]
    fn antisymmetric_canonicalization() {
        let spec = RelationSpec::turnbull_anti(3, 2, HMode::Symbolic);
        let diag = normalize(&[Symbol::x(2, 2)], rat(5), &spec).unwrap();
        assert!(diag.is_zero());
        let a = normalize(&[Symbol::x(2, 1), Symbol::y(1, 1)], rat(1), &spec).unwrap();
        let b = normalize(&[Symbol::x(1, 2), Symbol::y(1, 1)], rat(1), &spec).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn scalar_h_is_central() {
        let spec = RelationSpec::huks(2, super::super::relation::Side::Y);
        let a = normalize(
            &[Symbol::y(1, 2), Symbol::h_scalar(), Symbol::x(1, 2)],
            rat(1),
            &spec,
        )
        .unwrap();
        let b = normalize(
            &[Symbol::h_scalar(), Symbol::y(1, 2), Symbol::x(1, 2)],
            rat(1),
            &spec,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn display_is_graded_then_lex() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let mut p = normalize(&[Symbol::x(1, 1), Symbol::y(1, 1)], ratio(-1, 2), &spec).unwrap();
        p += NCPoly::from_symbol(Symbol::h(1, 2));
        p += NCPoly::constant(rat(3));
        assert_eq!(p.to_string(), "3 + H[1,2] - 1/2*X[1,1]*Y[1,1]");
    }

    #[test]
    fn validate_rejects_foreign_generators() {
        let spec = cap111();
        let p = NCPoly::from_symbol(Symbol::x(2, 1));
        assert!(p.validate(&spec).is_err());
        let q = NCPoly::from_symbol(Symbol::x(1, 1));
        assert!(multiply(&p, &q, &spec).is_err());
    }
}
