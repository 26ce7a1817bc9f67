use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, NCPoly, Rational, RelationSpec};

/// An ordered list of tensor factor dimensions. Basis vectors are indexed by
/// multi-indices with 1-based entries, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSpace {
    dims: Vec<u8>,
}

impl MixedSpace {
    pub fn new(dims: Vec<u8>) -> Self {
        debug_assert!(dims.iter().all(|&d| d > 0));
        MixedSpace { dims }
    }

    /// `r` factors of equal dimension `d`.
    pub fn uniform(d: u8, r: usize) -> Self {
        MixedSpace::new(vec![d; r])
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dim_at(&self, pos: usize) -> u8 {
        self.dims[pos - 1]
    }

    pub fn dims(&self) -> &[u8] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().map(|&d| d as usize).product()
    }

    /// Replace the dimension of one factor (1-based position).
    pub fn with_dim_at(&self, pos: usize, d: u8) -> MixedSpace {
        let mut dims = self.dims.clone();
        dims[pos - 1] = d;
        MixedSpace::new(dims)
    }

    /// All multi-indices in lexicographic order.
    pub fn basis(&self) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for &d in &self.dims {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for idx in &out {
                for v in 1..=d {
                    let mut e = idx.clone();
                    e.push(v);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    pub fn contains(&self, idx: &[u8]) -> bool {
        idx.len() == self.dims.len()
            && idx.iter().zip(&self.dims).all(|(&v, &d)| v >= 1 && v <= d)
    }
}

impl fmt::Display for MixedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Sparse vector with polynomial coefficients, keyed by multi-index.
pub type SparseVec = BTreeMap<Vec<u8>, NCPoly>;

pub fn vec_add_term(v: &mut SparseVec, idx: Vec<u8>, p: NCPoly) {
    if p.is_zero() {
        return;
    }
    match v.entry(idx) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(p);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += p;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// A sparse linear map between mixed tensor spaces with entries in the
/// noncommutative polynomial ring. Stored column-major (input index first):
/// both composition and application consume columns. Zero entries are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    domain: MixedSpace,
    codomain: MixedSpace,
    columns: BTreeMap<Vec<u8>, BTreeMap<Vec<u8>, NCPoly>>,
}

impl TensorOperator {
    pub fn new(codomain: MixedSpace, domain: MixedSpace) -> Self {
        TensorOperator { domain, codomain, columns: BTreeMap::new() }
    }

    pub fn identity(space: &MixedSpace) -> Self {
        let mut op = TensorOperator::new(space.clone(), space.clone());
        for idx in space.basis() {
            op.columns.entry(idx.clone()).or_default().insert(idx, NCPoly::one());
        }
        op
    }

    /// `p * Id` on a space.
    pub fn scaled_identity(space: &MixedSpace, p: &NCPoly) -> Self {
        let mut op = TensorOperator::new(space.clone(), space.clone());
        if p.is_zero() {
            return op;
        }
        for idx in space.basis() {
            op.columns.entry(idx.clone()).or_default().insert(idx, p.clone());
        }
        op
    }

    pub fn domain(&self) -> &MixedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &MixedSpace {
        &self.codomain
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn entry_count(&self) -> usize {
        self.columns.values().map(BTreeMap::len).sum()
    }

    pub fn term_count(&self) -> usize {
        self.columns
            .values()
            .flat_map(|col| col.values())
            .map(NCPoly::term_count)
            .sum()
    }

    /// Iterate entries as `((out, in), poly)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((&Vec<u8>, &Vec<u8>), &NCPoly)> {
        self.columns
            .iter()
            .flat_map(|(input, col)| col.iter().map(move |(out, p)| ((out, input), p)))
    }

    pub fn add_entry(&mut self, out: Vec<u8>, input: Vec<u8>, p: NCPoly) {
        debug_assert!(self.codomain.contains(&out) && self.domain.contains(&input));
        if p.is_zero() {
            return;
        }
        let col = self.columns.entry(input.clone()).or_default();
        match col.entry(out) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        if self.columns.get(&input).is_some_and(BTreeMap::is_empty) {
            self.columns.remove(&input);
        }
    }

    /// The exact entry at `(out, input)`, zero when absent.
    pub fn coefficient(&self, out: &[u8], input: &[u8]) -> NCPoly {
        self.columns
            .get(input)
            .and_then(|col| col.get(out))
            .cloned()
            .unwrap_or_else(NCPoly::zero)
    }

    pub fn add(&self, rhs: &TensorOperator) -> Result<TensorOperator> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::DimensionMismatch(format!(
                "operator addition: {}->{} vs {}->{}",
                self.domain, self.codomain, rhs.domain, rhs.codomain
            )));
        }
        let mut out = self.clone();
        for (input, col) in &rhs.columns {
            for (o, p) in col {
                out.add_entry(o.clone(), input.clone(), p.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &TensorOperator) -> Result<TensorOperator> {
        self.add(&rhs.scaled_rat(&crate::exactalg::rat(-1)))
    }

    pub fn scaled_rat(&self, c: &Rational) -> TensorOperator {
        let mut out = TensorOperator::new(self.codomain.clone(), self.domain.clone());
        if num::Zero::is_zero(c) {
            return out;
        }
        for (input, col) in &self.columns {
            let newcol: BTreeMap<Vec<u8>, NCPoly> =
                col.iter().map(|(o, p)| (o.clone(), p.scaled(c))).collect();
            out.columns.insert(input.clone(), newcol);
        }
        out
    }

    /// Left-multiply every entry by a central polynomial coefficient.
    pub fn scaled_poly(&self, c: &NCPoly, spec: &RelationSpec) -> Result<TensorOperator> {
        let mut out = TensorOperator::new(self.codomain.clone(), self.domain.clone());
        for (input, col) in &self.columns {
            for (o, p) in col {
                out.add_entry(o.clone(), input.clone(), c.mul_unchecked(p, spec)?);
            }
        }
        Ok(out)
    }

    /// Operator composition `self . rhs` (apply `rhs` first). Entry products
    /// multiply left factor first: `(A B)[w,u] = sum_v A[w,v] * B[v,u]`.
    pub fn compose(&self, rhs: &TensorOperator, spec: &RelationSpec) -> Result<TensorOperator> {
        if self.domain != rhs.codomain {
            return Err(Error::DimensionMismatch(format!(
                "operator composition: {} vs {}",
                self.domain, rhs.codomain
            )));
        }
        let mut out = TensorOperator::new(self.codomain.clone(), rhs.domain.clone());
        for (u, col_b) in &rhs.columns {
            for (v, b) in col_b {
                if let Some(col_a) = self.columns.get(v) {
                    for (w, a) in col_a {
                        out.add_entry(w.clone(), u.clone(), a.mul_unchecked(b, spec)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply to a sparse vector (operator entries multiply on the left).
    pub fn apply_vec(&self, v: &SparseVec, spec: &RelationSpec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (idx, c) in v {
            if let Some(col) = self.columns.get(idx) {
                for (w, a) in col {
                    vec_add_term(&mut out, w.clone(), a.mul_unchecked(c, spec)?);
                }
            }
        }
        Ok(out)
    }

    /// Apply to the basis vector `e_idx`.
    pub fn apply_basis(&self, idx: &[u8], spec: &RelationSpec) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        v.insert(idx.to_vec(), NCPoly::one());
        self.apply_vec(&v, spec)
    }

    /// First differing entry against another operator.
    pub fn first_diff(
        &self,
        rhs: &TensorOperator,
    ) -> Option<(Vec<u8>, Vec<u8>, Monomial, Rational, Rational)> {
        let mut inputs: Vec<&Vec<u8>> = self.columns.keys().chain(rhs.columns.keys()).collect();
        inputs.sort();
        inputs.dedup();
        let empty = BTreeMap::new();
        for input in inputs {
            let a = self.columns.get(input).unwrap_or(&empty);
            let b = rhs.columns.get(input).unwrap_or(&empty);
            let mut outs: Vec<&Vec<u8>> = a.keys().chain(b.keys()).collect();
            outs.sort();
            outs.dedup();
            for out in outs {
                let pa = a.get(out).cloned().unwrap_or_else(NCPoly::zero);
                let pb = b.get(out).cloned().unwrap_or_else(NCPoly::zero);
                if let Some((m, ca, cb)) = pa.first_diff(&pb) {
                    return Some((out.clone(), input.clone(), m, ca, cb));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, HMode, Symbol};

    #[test]
    fn identity_and_scaling() {
        let space = MixedSpace::uniform(2, 2);
        let id = TensorOperator::identity(&space);
        assert_eq!(id.entry_count(), 4);
        assert_eq!(id.coefficient(&[1, 2], &[1, 2]), NCPoly::one());
        assert!(id.coefficient(&[1, 2], &[2, 1]).is_zero());
        let z = id.scaled_rat(&rat(0));
        assert!(z.is_zero());
    }

    #[test]
    fn composition_is_matrix_product() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let space = MixedSpace::uniform(2, 1);
        // A = X matrix on one factor, B = Y matrix; AB entries X[i,j]Y[j,k].
        let mut a = TensorOperator::new(space.clone(), space.clone());
        let mut b = TensorOperator::new(space.clone(), space.clone());
        for i in 1..=2u8 {
            for j in 1..=2u8 {
                a.add_entry(vec![i], vec![j], spec.x_poly(i, j).unwrap());
                b.add_entry(vec![i], vec![j], spec.y_poly(i, j).unwrap());
            }
        }
        let ab = a.compose(&b, &spec).unwrap();
        let mut expect = NCPoly::zero();
        for j in 1..=2u8 {
            expect += crate::exactalg::normalize(
                &[Symbol::x(1, j), Symbol::y(j, 2)],
                rat(1),
                &spec,
            )
            .unwrap();
        }
        assert_eq!(ab.coefficient(&[1], &[2]), expect);
    }

    #[test]
    fn cancelling_entries_are_pruned() {
        let space = MixedSpace::uniform(2, 1);
        let mut a = TensorOperator::new(space.clone(), space.clone());
        a.add_entry(vec![1], vec![1], NCPoly::one());
        a.add_entry(vec![1], vec![1], NCPoly::constant(rat(-1)));
        assert!(a.is_zero());
        assert_eq!(a.entry_count(), 0);
    }

    #[test]
    fn apply_matches_compose_columns() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let space = MixedSpace::uniform(2, 2);
        let mut a = TensorOperator::new(space.clone(), space.clone());
        for (n, idx) in space.basis().into_iter().enumerate() {
            a.add_entry(vec![1, 1], idx, NCPoly::constant(rat(n as i64 + 1)));
        }
        let id = TensorOperator::identity(&space);
        let prod = a.compose(&id, &spec).unwrap();
        for idx in space.basis() {
            assert_eq!(
                prod.apply_basis(&idx, &spec).unwrap(),
                a.apply_basis(&idx, &spec).unwrap()
            );
        }
    }
}
