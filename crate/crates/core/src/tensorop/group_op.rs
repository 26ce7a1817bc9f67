use std::collections::BTreeMap;

use super::operator::{MixedSpace, TensorOperator};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, NCPoly, Rational, RelationSpec};
use crate::symgroup::{GroupAlgebraElement, Permutation};

/// An element of (group algebra of `S_r`) tensor (operators between mixed
/// tensor spaces): a finite sum `sigma (x) A_sigma` with all `A_sigma`
/// sharing one domain and codomain. Products follow
/// `(a (x) A)(b (x) B) = (ab) (x) (AB)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOperator {
    r: usize,
    domain: MixedSpace,
    codomain: MixedSpace,
    terms: BTreeMap<Permutation, TensorOperator>,
}

impl GroupOperator {
    pub fn zero(r: usize, codomain: MixedSpace, domain: MixedSpace) -> Self {
        GroupOperator { r, domain, codomain, terms: BTreeMap::new() }
    }

    /// `identity (x) op`.
    pub fn from_tensor(r: usize, op: TensorOperator) -> Self {
        let mut go =
            GroupOperator::zero(r, op.codomain().clone(), op.domain().clone());
        go.terms.insert(Permutation::identity(r), op);
        go
    }

    /// `g (x) op` for a group algebra element, coefficients folded into the
    /// operator entries.
    pub fn from_group_algebra(g: &GroupAlgebraElement, op: &TensorOperator) -> Self {
        let mut go = GroupOperator::zero(
            g.degree(),
            op.codomain().clone(),
            op.domain().clone(),
        );
        for (p, c) in g.terms() {
            go.add_term(p.clone(), op.scaled_rat(c)).expect("shared spaces");
        }
        go
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn domain(&self) -> &MixedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &MixedSpace {
        &self.codomain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &TensorOperator)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.values().map(TensorOperator::term_count).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Permutation, op: TensorOperator) -> Result<()> {
        if op.domain() != &self.domain || op.codomain() != &self.codomain {
            return Err(Error::DimensionMismatch("group operator term spaces".into()));
        }
        if op.is_zero() {
            return Ok(());
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(op);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&op)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &GroupOperator) -> Result<GroupOperator> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain || self.r != rhs.r {
            return Err(Error::DimensionMismatch("group operator addition".into()));
        }
        let mut out = self.clone();
        for (p, op) in &rhs.terms {
            out.add_term(p.clone(), op.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &GroupOperator) -> Result<GroupOperator> {
        self.add(&rhs.scaled_rat(&crate::exactalg::rat(-1)))
    }

    pub fn scaled_rat(&self, c: &Rational) -> GroupOperator {
        let mut out = GroupOperator::zero(self.r, self.codomain.clone(), self.domain.clone());
        for (p, op) in &self.terms {
            out.terms.insert(p.clone(), op.scaled_rat(c));
        }
        out
    }

    /// `self . rhs`: convolution on the group part, composition on the
    /// tensor part.
    pub fn compose(&self, rhs: &GroupOperator, spec: &RelationSpec) -> Result<GroupOperator> {
        if self.r != rhs.r {
            return Err(Error::DimensionMismatch("group operator degree".into()));
        }
        if self.domain != rhs.codomain {
            return Err(Error::DimensionMismatch(format!(
                "group operator composition: {} vs {}",
                self.domain, rhs.codomain
            )));
        }
        let mut out = GroupOperator::zero(self.r, self.codomain.clone(), rhs.domain.clone());
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p.compose(q), a.compose(b, spec)?)?;
            }
        }
        Ok(out)
    }

    /// The entry at `(sigma, out, in)`.
    pub fn coefficient(&self, sigma: &Permutation, out: &[u8], input: &[u8]) -> NCPoly {
        self.terms
            .get(sigma)
            .map(|op| op.coefficient(out, input))
            .unwrap_or_else(NCPoly::zero)
    }

    /// All group-algebra coefficients of one matrix entry:
    /// pairs `(sigma, polynomial)` with nonzero polynomial.
    pub fn entry_coefficients(&self, out: &[u8], input: &[u8]) -> Vec<(Permutation, NCPoly)> {
        self.terms
            .iter()
            .filter_map(|(p, op)| {
                let c = op.coefficient(out, input);
                (!c.is_zero()).then(|| (p.clone(), c))
            })
            .collect()
    }

    /// First location where two group operators differ:
    /// `(sigma, out, in, monomial, lhs coefficient, rhs coefficient)`.
    #[allow(clippy::type_complexity)]
    pub fn first_diff(
        &self,
        rhs: &GroupOperator,
    ) -> Option<(Permutation, Vec<u8>, Vec<u8>, Monomial, Rational, Rational)> {
        let mut sigmas: Vec<&Permutation> = self.terms.keys().chain(rhs.terms.keys()).collect();
        sigmas.sort();
        sigmas.dedup();
        for sigma in sigmas {
            match (self.terms.get(sigma), rhs.terms.get(sigma)) {
                (Some(a), Some(b)) => {
                    if let Some((o, i, m, ca, cb)) = a.first_diff(b) {
                        return Some((sigma.clone(), o, i, m, ca, cb));
                    }
                }
                (Some(a), None) => {
                    if let Some(((o, i), p)) = a.entries().next() {
                        let (m, c) = p.terms().next().expect("nonzero entry");
                        return Some((
                            sigma.clone(),
                            o.clone(),
                            i.clone(),
                            m.clone(),
                            c.clone(),
                            num::Zero::zero(),
                        ));
                    }
                }
                (None, Some(b)) => {
                    if let Some(((o, i), p)) = b.entries().next() {
                        let (m, c) = p.terms().next().expect("nonzero entry");
                        return Some((
                            sigma.clone(),
                            o.clone(),
                            i.clone(),
                            m.clone(),
                            num::Zero::zero(),
                            c.clone(),
                        ));
                    }
                }
                (None, None) => {}
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::builders::{epsilon, perm_operator};
    use super::*;
    use crate::exactalg::HMode;

    #[test]
    fn epsilon_two_by_two() {
        let space = MixedSpace::uniform(2, 2);
        let e = epsilon(2, &space).unwrap();
        assert_eq!(e.terms().count(), 2);
        let id = Permutation::identity(2);
        let sw = Permutation::transposition(2, 1, 2);
        assert_eq!(e.coefficient(&id, &[1, 2], &[1, 2]), NCPoly::one());
        assert_eq!(e.coefficient(&sw, &[2, 1], &[1, 2]), NCPoly::one());
    }

    #[test]
    fn epsilon_absorbs_transpositions_both_ways() {
        // epsilon . ((i,j) (x) 1) = epsilon . (1 (x) P^(i,j)) for r <= 3.
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        for r in 2..=3usize {
            let space = MixedSpace::uniform(2, r);
            let e = epsilon(r, &space).unwrap();
            for i in 1..=r as u8 {
                for j in i + 1..=r as u8 {
                    let t = Permutation::transposition(r, i, j);
                    let left = e
                        .compose(
                            &GroupOperator::from_group_algebra(
                                &GroupAlgebraElement::from_permutation(t.clone()),
                                &TensorOperator::identity(&space),
                            ),
                            &spec,
                        )
                        .unwrap();
                    let right = e
                        .compose(
                            &GroupOperator::from_tensor(r, perm_operator(&t, &space)),
                            &spec,
                        )
                        .unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}
