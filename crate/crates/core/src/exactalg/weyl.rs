use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::poly::NCPoly;
use super::relation::RelationSpec;
use super::symbol::{GenKind, Symbol};
use super::{rat, Rational};
use crate::error::{Error, Result};

/// A commutative polynomial in the variables `x[i,j]`, the carrier of the
/// differential action of the Weyl algebra. Keys are sorted exponent lists
/// `((i, j), e)` with `e > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XPoly {
    terms: BTreeMap<Vec<((u8, u8), u32)>, Rational>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = XPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: u8, j: u8) -> Self {
        let mut p = XPoly::zero();
        p.add_term(vec![((i, j), 1)], Rational::one());
        p
    }

    /// A monomial given by an exponent list (need not be sorted or merged).
    pub fn monomial(vars: &[(u8, u8)], coeff: Rational) -> Self {
        let mut exp: BTreeMap<(u8, u8), u32> = BTreeMap::new();
        for &v in vars {
            *exp.entry(v).or_insert(0) += 1;
        }
        let mut p = XPoly::zero();
        p.add_term(exp.into_iter().collect(), coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<((u8, u8), u32)>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> XPoly {
        let mut out = XPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (k, a) in &self.terms {
            out.terms.insert(k.clone(), a * c);
        }
        out
    }

    /// Multiply by the single variable `x[i,j]`.
    pub fn mul_var(&self, i: u8, j: u8) -> XPoly {
        let mut out = XPoly::zero();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            match key.binary_search_by_key(&(i, j), |&(v, _)| v) {
                Ok(pos) => key[pos].1 += 1,
                Err(pos) => key.insert(pos, ((i, j), 1)),
            }
            out.add_term(key, c.clone());
        }
        out
    }

    /// Partial derivative with respect to `x[i,j]`.
    pub fn differentiate(&self, i: u8, j: u8) -> XPoly {
        let mut out = XPoly::zero();
        for (k, c) in &self.terms {
            if let Ok(pos) = k.binary_search_by_key(&(i, j), |&(v, _)| v) {
                let e = k[pos].1;
                let mut key = k.clone();
                if e == 1 {
                    key.remove(pos);
                } else {
                    key[pos].1 = e - 1;
                }
                out.add_term(key, c * rat(e as i64));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<((u8, u8), u32)>, &Rational)> {
        self.terms.iter()
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let vars: Vec<String> = k
                    .iter()
                    .map(|&((i, j), e)| {
                        if e == 1 {
                            format!("x[{i},{j}]")
                        } else {
                            format!("x[{i},{j}]^{e}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Apply a single Weyl-algebra generator to a polynomial: `X[i,j]` multiplies
/// by `x[i,j]`, `Y[k,l] = d/dx[l,k]` differentiates.
fn apply_symbol(sym: Symbol, f: &XPoly) -> Result<XPoly> {
    match sym.kind {
        GenKind::X => Ok(f.mul_var(sym.row, sym.col)),
        GenKind::Y => Ok(f.differentiate(sym.col, sym.row)),
        _ => Err(Error::NotWeyl(format!("generator {sym} has no differential action"))),
    }
}

/// Differential action of a normal-form element of the Weyl algebra:
/// in each monomial the rightmost factor acts first, the leftmost last.
pub fn apply_weyl(p: &NCPoly, f: &XPoly, spec: &RelationSpec) -> Result<XPoly> {
    if !spec.is_weyl() {
        return Err(Error::NotWeyl(spec.to_string()));
    }
    let mut out = XPoly::zero();
    for (m, c) in p.terms() {
        let mut acc = f.clone();
        for sym in m.word().iter().rev() {
            acc = apply_symbol(*sym, &acc)?;
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc.scaled(c));
    }
    Ok(out)
}

/// Factorwise action of an un-normalized generator word (rightmost factor
/// first). Independent of the rewriting engine; serves as the action oracle.
pub fn apply_word_weyl(word: &[Symbol], f: &XPoly) -> Result<XPoly> {
    let mut acc = f.clone();
    for sym in word.iter().rev() {
        acc = apply_symbol(*sym, &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::super::poly::normalize;
    use super::*;

    #[test]
    fn differentiation_basics() {
        // d/dx (x^2) = 2x
        let f = XPoly::var(1, 1).mul_var(1, 1);
        let spec = RelationSpec::weyl(1);
        let d = NCPoly::from_symbol(Symbol::y(1, 1));
        let out = apply_weyl(&d, &f, &spec).unwrap();
        assert_eq!(out, XPoly::var(1, 1).scaled(&rat(2)));
    }

    #[test]
    fn euler_operator_on_degree_one() {
        // x d/dx applied to x gives x.
        let spec = RelationSpec::weyl(1);
        let p = normalize(&[Symbol::x(1, 1), Symbol::y(1, 1)], rat(1), &spec).unwrap();
        let f = XPoly::var(1, 1);
        assert_eq!(apply_weyl(&p, &f, &spec).unwrap(), f);
    }

    #[test]
    fn normal_form_action_agrees_with_word_action() {
        // d x acting on 1: word action gives 1; the normal form must agree.
        let spec = RelationSpec::weyl(1);
        let word = [Symbol::y(1, 1), Symbol::x(1, 1)];
        let p = normalize(&word, rat(1), &spec).unwrap();
        let f = XPoly::one();
        assert_eq!(
            apply_weyl(&p, &f, &spec).unwrap(),
            apply_word_weyl(&word, &f).unwrap()
        );
        assert_eq!(apply_weyl(&p, &f, &spec).unwrap(), XPoly::one());
    }

    #[test]
    fn non_weyl_spec_is_rejected() {
        let spec = RelationSpec::capelli(2, 1, 2, super::super::relation::HMode::Identity);
        let p = NCPoly::from_symbol(Symbol::x(1, 1));
        assert!(apply_weyl(&p, &XPoly::one(), &spec).is_err());
    }
}
