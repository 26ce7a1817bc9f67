//! Matrix functionals over the noncommutative polynomial ring: column
//! determinant, row-permuted permanent, the Schur matrix function `d^phi`,
//! Pfaffians, submatrices, and multiplicity factors.

mod pfaffian;

use itertools::Itertools;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{NCPoly, RelationSpec, Rational};
use crate::symgroup::{Permutation, QMat, SeminormalRep};

pub use pfaffian::{pfaffian, pfaffian_fullsum, pfaffian_recursive, pfaffian_sequence};

/// A rectangular matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    data: Vec<NCPoly>,
}

impl RingMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, data: vec![NCPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RingMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// Build from a function of 1-based (row, col) indices.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(u8, u8) -> Result<NCPoly>,
    {
        let mut m = RingMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i as u8 + 1, j as u8 + 1)?;
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based access.
    pub fn at(&self, i: usize, j: usize) -> &NCPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCPoly) {
        self.data[i * self.cols + j] = v;
    }

    /// Submatrix with the given 1-based row and column index lists, in the
    /// listed order.
    pub fn submatrix(&self, rows: &[u8], cols: &[u8]) -> RingMatrix {
        let mut m = RingMatrix::zero(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.at(i as usize - 1, j as usize - 1).clone());
            }
        }
        m
    }

    pub fn add(&self, rhs: &RingMatrix) -> Result<RingMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        Ok(out)
    }
}

/// Column determinant: rows permuted, columns in natural order, each product
/// taken column 1 first.
pub fn column_det(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut acc = NCPoly::zero();
    for sigma in Permutation::all(n) {
        let mut term = NCPoly::constant(crate::exactalg::rat(sigma.sign() as i64));
        for t in 1..=n as u8 {
            term = term.mul_unchecked(m.at(sigma.apply(t) as usize - 1, t as usize - 1), spec)?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Row-permuted permanent: the signless analogue of the column determinant.
pub fn permanent_rowperm(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut acc = NCPoly::zero();
    for sigma in Permutation::all(n) {
        let mut term = NCPoly::one();
        for t in 1..=n as u8 {
            term = term.mul_unchecked(m.at(sigma.apply(t) as usize - 1, t as usize - 1), spec)?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Square matrix of polynomials, used for `End(V)`-valued values of the Schur
/// matrix function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    pub dim: usize,
    data: Vec<NCPoly>,
}

impl PolyMat {
    pub fn zero(dim: usize) -> Self {
        PolyMat { dim, data: vec![NCPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = PolyMat::zero(dim);
        for i in 0..dim {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// Scalar polynomial lifted to `p * Id`.
    pub fn scalar(dim: usize, p: &NCPoly) -> Self {
        let mut m = PolyMat::zero(dim);
        for i in 0..dim {
            m.set(i, i, p.clone());
        }
        m
    }

    /// A rational matrix lifted to constant polynomial entries.
    pub fn from_qmat(q: &QMat) -> Self {
        let mut m = PolyMat::zero(q.dim);
        for i in 0..q.dim {
            for j in 0..q.dim {
                if !q.at(i, j).is_zero() {
                    m.set(i, j, NCPoly::constant(q.at(i, j).clone()));
                }
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &NCPoly {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCPoly) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add(&self, rhs: &PolyMat) -> PolyMat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &PolyMat) -> PolyMat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn scaled(&self, c: &NCPoly, spec: &RelationSpec) -> Result<PolyMat> {
        let mut out = PolyMat::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, c.mul_unchecked(self.at(i, j), spec)?);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &PolyMat, spec: &RelationSpec) -> Result<PolyMat> {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = PolyMat::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let mut v = out.at(i, j).clone();
                    v += a.mul_unchecked(b, spec)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(NCPoly::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.data.iter().map(NCPoly::term_count).sum()
    }

    /// First differing entry between two matrices, with the monomial and
    /// both coefficients.
    pub fn first_diff(
        &self,
        rhs: &PolyMat,
    ) -> Option<(usize, usize, crate::exactalg::Monomial, Rational, Rational)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if let Some((m, a, b)) = self.at(i, j).first_diff(rhs.at(i, j)) {
                    return Some((i, j, m, a, b));
                }
            }
        }
        None
    }
}

/// An `r x r` matrix whose entries are `dim x dim` polynomial blocks.
#[derive(Clone, Debug)]
pub struct BlockMatrix {
    pub r: usize,
    pub dim: usize,
    blocks: Vec<PolyMat>,
}

impl BlockMatrix {
    pub fn from_blocks(r: usize, dim: usize, blocks: Vec<PolyMat>) -> Result<Self> {
        if blocks.len() != r * r || blocks.iter().any(|b| b.dim != dim) {
            return Err(Error::DimensionMismatch("block matrix".into()));
        }
        Ok(BlockMatrix { r, dim, blocks })
    }

    /// Lift a scalar matrix to scalar blocks `entry * Id`.
    pub fn from_scalar_matrix(m: &RingMatrix, dim: usize) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
        }
        let blocks = (0..m.rows)
            .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
            .map(|(i, j)| PolyMat::scalar(dim, m.at(i, j)))
            .collect();
        BlockMatrix::from_blocks(m.rows, dim, blocks)
    }

    pub fn at(&self, i: usize, j: usize) -> &PolyMat {
        &self.blocks[i * self.r + j]
    }

    pub fn set(&mut self, i: usize, j: usize, b: PolyMat) {
        self.blocks[i * self.r + j] = b;
    }
}

/// The Schur matrix function
/// `d^phi(M) = sum over sigma of phi(sigma) * prod_t M[sigma(t), t]`,
/// products taken column 1 first and `phi(sigma)` multiplying from the left.
pub fn schur_matrix_function(
    rep: &SeminormalRep,
    m: &BlockMatrix,
    spec: &RelationSpec,
) -> Result<PolyMat> {
    if m.r != rep.degree() {
        return Err(Error::DimensionMismatch("Schur matrix function".into()));
    }
    let mut acc = PolyMat::zero(m.dim);
    for sigma in Permutation::all(m.r) {
        let mut term = PolyMat::from_qmat(&rep.matrix(&sigma));
        for t in 1..=m.r as u8 {
            term = term.mul(m.at(sigma.apply(t) as usize - 1, t as usize - 1), spec)?;
            if term.is_zero() {
                break;
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `d^phi` of a matrix with scalar polynomial entries.
pub fn schur_scalar(rep: &SeminormalRep, m: &RingMatrix, spec: &RelationSpec) -> Result<PolyMat> {
    let block = BlockMatrix::from_scalar_matrix(m, rep.dim())?;
    schur_matrix_function(rep, &block, spec)
}

/// Multiplicity factor `v(J)`: the product of the factorials of the
/// multiplicities of a non-decreasing multi-index.
pub fn v_multiplicity(j: &[u8]) -> Result<Rational> {
    if j.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotNonDecreasing);
    }
    let mut acc = Rational::one();
    for (_, group) in &j.iter().chunk_by(|&&v| v) {
        let mult = group.count();
        acc *= crate::exactalg::factorial(mult);
    }
    Ok(acc)
}

/// Strictly increasing `r`-subsets of `1..=n`.
pub fn increasing_subsets(n: u8, r: usize) -> Vec<Vec<u8>> {
    (1..=n).combinations(r).collect()
}

/// Non-decreasing sequences of length `r` over `1..=n`.
pub fn nondecreasing_sequences(n: u8, r: usize) -> Vec<Vec<u8>> {
    (1..=n).combinations_with_replacement(r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{normalize, rat, HMode, Symbol};

    fn spec22() -> RelationSpec {
        RelationSpec::capelli(2, 2, 2, HMode::Symbolic)
    }

    fn x_matrix(spec: &RelationSpec) -> RingMatrix {
        let (r, c) = spec.x_dims();
        RingMatrix::from_fn(r as usize, c as usize, |i, j| spec.x_poly(i, j)).unwrap()
    }

    #[test]
    fn column_det_two_by_two() {
        // [[a,b],[c,d]] with commuting entries: ad - cb.
        let spec = spec22();
        let m = x_matrix(&spec);
        let det = column_det(&m, &spec).unwrap();
        let mut expect =
            normalize(&[Symbol::x(1, 1), Symbol::x(2, 2)], rat(1), &spec).unwrap();
        expect -= normalize(&[Symbol::x(2, 1), Symbol::x(1, 2)], rat(1), &spec).unwrap();
        assert_eq!(det, expect);
    }

    #[test]
    fn permanent_two_by_two() {
        let spec = spec22();
        let m = x_matrix(&spec);
        let per = permanent_rowperm(&m, &spec).unwrap();
        let mut expect =
            normalize(&[Symbol::x(1, 1), Symbol::x(2, 2)], rat(1), &spec).unwrap();
        expect += normalize(&[Symbol::x(2, 1), Symbol::x(1, 2)], rat(1), &spec).unwrap();
        assert_eq!(per, expect);
    }

    #[test]
    fn one_by_one_functionals() {
        let spec = spec22();
        let m = RingMatrix::from_fn(1, 1, |_, _| spec.x_poly(1, 2)).unwrap();
        assert_eq!(column_det(&m, &spec).unwrap(), spec.x_poly(1, 2).unwrap());
        assert_eq!(permanent_rowperm(&m, &spec).unwrap(), spec.x_poly(1, 2).unwrap());
    }

    #[test]
    fn det_and_permanent_agree_with_commutative_expansion() {
        // Brute-force over all permutations with entries as commuting
        // X symbols of a 4x4 generic matrix.
        let spec = RelationSpec::capelli(4, 4, 4, HMode::Symbolic);
        let m = x_matrix(&spec);
        let det = column_det(&m, &spec).unwrap();
        let per = permanent_rowperm(&m, &spec).unwrap();
        let mut det_expect = NCPoly::zero();
        let mut per_expect = NCPoly::zero();
        for sigma in Permutation::all(4) {
            let word: Vec<Symbol> =
                (1..=4u8).map(|t| Symbol::x(sigma.apply(t), t)).collect();
            let term = normalize(&word, rat(1), &spec).unwrap();
            per_expect += term.clone();
            det_expect += term.scaled(&rat(sigma.sign() as i64));
        }
        assert_eq!(det, det_expect);
        assert_eq!(per, per_expect);
    }

    #[test]
    fn schur_trivial_is_permanent_and_sign_is_det() {
        for r in 2..=3usize {
            let spec = RelationSpec::capelli(r as u8, r as u8, r as u8, HMode::Symbolic);
            let m = x_matrix(&spec);
            let triv = SeminormalRep::build(&[r as u8]).unwrap();
            let sgn = SeminormalRep::build(&vec![1u8; r]).unwrap();
            let d_triv = schur_scalar(&triv, &m, &spec).unwrap();
            let d_sgn = schur_scalar(&sgn, &m, &spec).unwrap();
            assert_eq!(d_triv.at(0, 0), &permanent_rowperm(&m, &spec).unwrap());
            assert_eq!(d_sgn.at(0, 0), &column_det(&m, &spec).unwrap());
        }
    }

    #[test]
    fn schur_trace_is_immanant() {
        // trace d^phi = sum over sigma of chi(sigma) * prod of entries, on
        // commuting entries, for every shape of size 3.
        let spec = RelationSpec::capelli(3, 3, 3, HMode::Symbolic);
        let m = x_matrix(&spec);
        for shape in crate::symgroup::partitions(3) {
            let rep = SeminormalRep::build(&shape).unwrap();
            let d = schur_scalar(&rep, &m, &spec).unwrap();
            let mut trace = NCPoly::zero();
            for i in 0..rep.dim() {
                trace += d.at(i, i);
            }
            let mut immanant = NCPoly::zero();
            for sigma in Permutation::all(3) {
                let chi = crate::symgroup::character(&shape, &sigma).unwrap();
                let word: Vec<Symbol> =
                    (1..=3u8).map(|t| Symbol::x(sigma.apply(t), t)).collect();
                immanant += normalize(&word, chi, &spec).unwrap();
            }
            assert_eq!(trace, immanant, "shape {shape:?}");
        }
    }

    #[test]
    fn multiplicity_factors() {
        assert_eq!(v_multiplicity(&[1, 2, 3]).unwrap(), rat(1));
        assert_eq!(v_multiplicity(&[1, 1, 2]).unwrap(), rat(2));
        assert_eq!(v_multiplicity(&[2, 2, 2]).unwrap(), rat(6));
        assert!(v_multiplicity(&[2, 1]).is_err());
    }
}
