use num::{One, Zero};

use crate::exactalg::Rational;

/// Small dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub dim: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zero(dim: usize) -> Self {
        QMat { dim, data: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = QMat::zero(dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add(&self, rhs: &QMat) -> QMat {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> QMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = QMat::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.at(i, j) + a * rhs.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.at(i, j).is_zero()))
    }
}
