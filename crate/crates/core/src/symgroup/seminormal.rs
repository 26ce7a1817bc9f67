use num::One;

use super::perm::{GroupAlgebraElement, Permutation};
use super::qmat::QMat;
use super::tableau::{partition_size, standard_tableaux, StandardTableau};
use crate::error::{Error, Result};
use crate::exactalg::{rat, ratio, Rational};

/// Young's seminormal representation of `S_r` for a partition shape: rational
/// matrices on the basis of standard tableaux, together with the diagonal
/// Gram norms of the invariant inner product.
///
/// On the Young basis the Jucys-Murphy element `z_k` acts diagonally with
/// eigenvalue the content `c_T(k)`; this is asserted by tests rather than
/// assumed.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    shape: Vec<u8>,
    r: usize,
    tableaux: Vec<StandardTableau>,
    adjacent: Vec<QMat>,
    gram: Vec<Rational>,
}

/// Bound on the symmetric group size for representation construction.
pub const MAX_SEMINORMAL_R: usize = 6;

impl SeminormalRep {
    pub fn build(shape: &[u8]) -> Result<Self> {
        let r = partition_size(shape);
        if r == 0 || r > MAX_SEMINORMAL_R {
            return Err(Error::Unsupported(format!(
                "seminormal representation supported for 1..={MAX_SEMINORMAL_R} boxes, got {r}"
            )));
        }
        let tableaux = standard_tableaux(shape)?;
        let dim = tableaux.len();
        let index_of = |t: &StandardTableau| tableaux.iter().position(|u| u == t).unwrap();

        let mut adjacent = Vec::new();
        for k in 1..r as u8 {
            let mut mat = QMat::zero(dim);
            for (ti, t) in tableaux.iter().enumerate() {
                let d = t.content(k + 1) - t.content(k);
                match t.swap_adjacent(k) {
                    None => {
                        // Same row gives d = 1, same column d = -1.
                        mat.set(ti, ti, ratio(1, d));
                    }
                    Some(t2) => {
                        let tj = index_of(&t2);
                        mat.set(ti, ti, ratio(1, d));
                        // Off-diagonal normalization: coefficient 1 going
                        // against the axial distance, 1 - 1/d^2 with it.
                        if d < 0 {
                            mat.set(tj, ti, Rational::one());
                        } else {
                            mat.set(tj, ti, rat(1) - ratio(1, d * d));
                        }
                    }
                }
            }
            adjacent.push(mat);
        }

        // Gram norms of the invariant form, propagated from the first
        // tableau along adjacent swaps: the form is invariant, so
        // gram(T') * c^2 = gram(T) * (1 - a^2) with a = 1/d on the diagonal
        // and c the off-diagonal coefficient out of T.
        let mut gram: Vec<Option<Rational>> = vec![None; dim];
        gram[0] = Some(Rational::one());
        let mut queue = vec![0usize];
        while let Some(ti) = queue.pop() {
            let gt = gram[ti].clone().unwrap();
            for k in 1..r as u8 {
                if let Some(t2) = tableaux[ti].swap_adjacent(k) {
                    let tj = index_of(&t2);
                    if gram[tj].is_none() {
                        let d = tableaux[ti].content(k + 1) - tableaux[ti].content(k);
                        let a2 = ratio(1, d * d);
                        let c = if d < 0 { Rational::one() } else { rat(1) - a2.clone() };
                        gram[tj] = Some(gt.clone() * (rat(1) - a2) / (c.clone() * c));
                        queue.push(tj);
                    }
                }
            }
        }
        let gram = gram
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .expect("tableau graph is connected under adjacent swaps");

        Ok(SeminormalRep { shape: shape.to_vec(), r, tableaux, adjacent, gram })
    }

    pub fn shape(&self) -> &[u8] {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn tableau_index(&self, t: &StandardTableau) -> Option<usize> {
        self.tableaux.iter().position(|u| u == t)
    }

    pub fn gram(&self) -> &[Rational] {
        &self.gram
    }

    /// Matrix of an adjacent transposition `(k, k+1)`.
    pub fn adjacent(&self, k: u8) -> &QMat {
        &self.adjacent[k as usize - 1]
    }

    /// Matrix of an arbitrary permutation, via factorization into adjacent
    /// transpositions.
    pub fn matrix(&self, p: &Permutation) -> QMat {
        debug_assert_eq!(p.degree(), self.r);
        let mut out = QMat::identity(self.dim());
        for i in p.adjacent_word() {
            out = out.mul(self.adjacent(i));
        }
        out
    }

    /// Matrix of a group algebra element.
    pub fn matrix_of(&self, e: &GroupAlgebraElement) -> QMat {
        let mut out = QMat::zero(self.dim());
        for (p, c) in e.terms() {
            out = out.add(&self.matrix(p).scaled(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::perm::jucys_murphy;
    use super::*;
    use crate::symgroup::tableau::partitions;
    use num::Zero;

    #[test]
    fn one_dimensional_shapes() {
        for r in 1..=4usize {
            let triv = SeminormalRep::build(&[r as u8]).unwrap();
            let sign = SeminormalRep::build(&vec![1u8; r]).unwrap();
            for p in Permutation::all(r) {
                assert_eq!(triv.matrix(&p), QMat::identity(1));
                assert_eq!(sign.matrix(&p), QMat::identity(1).scaled(&rat(p.sign() as i64)));
            }
        }
    }

    #[test]
    fn homomorphism_and_coxeter_relations() {
        for r in 2..=5usize {
            for shape in partitions(r) {
                let rep = SeminormalRep::build(&shape).unwrap();
                let id = QMat::identity(rep.dim());
                for k in 1..r as u8 {
                    let s = rep.adjacent(k);
                    assert_eq!(s.mul(s), id, "involution at {shape:?} k={k}");
                }
                for k in 1..r as u8 - 1 {
                    let a = rep.adjacent(k);
                    let b = rep.adjacent(k + 1);
                    assert_eq!(
                        a.mul(&b.mul(a)),
                        b.mul(&a.mul(b)),
                        "braid at {shape:?} k={k}"
                    );
                }
                for k in 1..r as u8 {
                    for l in k + 2..r as u8 {
                        let a = rep.adjacent(k);
                        let b = rep.adjacent(l);
                        assert_eq!(a.mul(b), b.mul(a), "distant commuting {shape:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_on_all_pairs_r4() {
        for shape in partitions(4) {
            let rep = SeminormalRep::build(&shape).unwrap();
            let perms = Permutation::all(4);
            for p in &perms {
                for q in &perms {
                    assert_eq!(rep.matrix(p).mul(&rep.matrix(q)), rep.matrix(&p.compose(q)));
                }
            }
        }
    }

    #[test]
    fn jucys_murphy_acts_by_contents() {
        for r in 2..=5usize {
            for shape in partitions(r) {
                let rep = SeminormalRep::build(&shape).unwrap();
                for k in 1..=r {
                    let z = rep.matrix_of(&jucys_murphy(k, r, false).unwrap());
                    assert!(z.is_diagonal(), "z_{k} not diagonal on {shape:?}");
                    for (ti, t) in rep.tableaux().iter().enumerate() {
                        assert_eq!(z.at(ti, ti), &rat(t.content(k as u8)));
                    }
                }
            }
        }
    }

    #[test]
    fn gram_form_is_invariant() {
        for shape in partitions(4) {
            let rep = SeminormalRep::build(&shape).unwrap();
            let dim = rep.dim();
            // G = diag(gram); check phi(s)^t G phi(s) = G for all generators.
            for k in 1..4u8 {
                let s = rep.adjacent(k);
                for i in 0..dim {
                    for j in 0..dim {
                        let mut v = Rational::zero();
                        for a in 0..dim {
                            v += s.at(a, i) * &rep.gram()[a] * s.at(a, j);
                        }
                        let expect = if i == j { rep.gram()[i].clone() } else { Rational::zero() };
                        assert_eq!(v, expect, "invariance fails at {shape:?}");
                    }
                }
            }
        }
    }
}
