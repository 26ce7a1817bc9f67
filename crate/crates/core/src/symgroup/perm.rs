use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational};

/// A permutation of `{1, ..., r}` in one-line notation. Composition follows
/// `(sigma . tau)(i) = sigma(tau(i))` throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (1..=r as u8).collect() }
    }

    /// From one-line images (1-based values).
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &v in &images {
            if v == 0 || v as usize > r || seen[v as usize] {
                return Err(Error::BadPermutation);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a, b)` in `S_r`.
    pub fn transposition(r: usize, a: u8, b: u8) -> Self {
        let mut images: Vec<u8> = (1..=r as u8).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `self . rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { images: rhs.images.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// `(-1)^(number of inversions)`.
    pub fn sign(&self) -> i8 {
        if inversions(&self.images) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All elements of `S_r` in lexicographic one-line order.
    pub fn all(r: usize) -> Vec<Permutation> {
        (1..=r as u8)
            .permutations(r)
            .map(|images| Permutation { images })
            .collect()
    }

    /// Adjacent-transposition word: `self = s_{i1} . s_{i2} . ... . s_{ik}`
    /// (each `i` denotes the transposition `(i, i+1)`).
    pub fn adjacent_word(&self) -> Vec<u8> {
        // Sort the one-line word back to the identity by adjacent swaps;
        // each swap multiplies by s_i on the right, so the factors come out
        // in reverse order.
        let mut w = self.images.clone();
        let mut rev = Vec::new();
        loop {
            let mut done = true;
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    rev.push(i as u8 + 1);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Cycle notation on moved points; identity prints as "e".
        let mut seen = vec![false; self.degree() + 1];
        let mut cycles = Vec::new();
        for start in 1..=self.degree() as u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start as usize] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur as usize] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
        }
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cyc in cycles {
            write!(f, "({})", cyc.iter().map(|v| v.to_string()).join(","))?;
        }
        Ok(())
    }
}

pub fn inversions(seq: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// Element of the rational group algebra of `S_r`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    r: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(r: usize) -> Self {
        GroupAlgebraElement { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        GroupAlgebraElement::from_permutation(Permutation::identity(r))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let r = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, rat(1));
        GroupAlgebraElement { r, terms }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.r);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// Convolution product; matches permutation composition.
    pub fn convolve(&self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.r);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }
}

/// The Jucys-Murphy element `z_k = sum of (i, k) for i < k`, or its reverse
/// variant `z'_k = sum of (k, i) for i > k` when `reversed` is set.
/// `z_1 = 0` and `z'_r = 0`.
pub fn jucys_murphy(k: usize, r: usize, reversed: bool) -> Result<GroupAlgebraElement> {
    if k == 0 || k > r {
        return Err(Error::Unsupported(format!("Jucys-Murphy index {k} out of 1..={r}")));
    }
    let mut out = GroupAlgebraElement::zero(r);
    if reversed {
        for i in k + 1..=r {
            out.add_term(Permutation::transposition(r, k as u8, i as u8), rat(1));
        }
    } else {
        for i in 1..k {
            out.add_term(Permutation::transposition(r, i as u8, k as u8), rat(1));
        }
    }
    Ok(out)
}

/// The 2-shuffles of an ordered even-size index set: arrangements
/// `(a_1, b_1, a_2, b_2, ...)` of the set with `a_t < b_t` and
/// `a_1 < a_2 < ...`, listed lexicographically with signs
/// `(-1)^(inversions of the arrangement)`.
pub fn two_shuffles(set: &[u8]) -> Result<Vec<(Vec<u8>, i8)>> {
    if set.len() % 2 != 0 {
        return Err(Error::OddIndexSet(set.len()));
    }
    let sorted: BTreeSet<u8> = set.iter().copied().collect();
    if sorted.len() != set.len() {
        return Err(Error::OverlappingBlocks);
    }
    let mut out = Vec::new();
    let mut arrangement = Vec::with_capacity(set.len());
    let mut remaining: Vec<u8> = sorted.into_iter().collect();
    shuffle_rec(&mut remaining, &mut arrangement, &mut out);
    // Signs relative to the sorted set: positions of the arrangement within
    // the sorted order.
    let index_of: BTreeMap<u8, u8> =
        set.iter().copied().sorted().enumerate().map(|(i, v)| (v, i as u8)).collect();
    Ok(out
        .into_iter()
        .map(|arr| {
            let positions: Vec<u8> = arr.iter().map(|v| index_of[v]).collect();
            let sign = if inversions(&positions) % 2 == 0 { 1 } else { -1 };
            (arr, sign)
        })
        .collect())
}

fn shuffle_rec(remaining: &mut Vec<u8>, arrangement: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if remaining.is_empty() {
        out.push(arrangement.clone());
        return;
    }
    // The smallest remaining element leads the next pair.
    let lead = remaining.remove(0);
    for idx in 0..remaining.len() {
        let partner = remaining.remove(idx);
        arrangement.push(lead);
        arrangement.push(partner);
        shuffle_rec(remaining, arrangement, out);
        arrangement.pop();
        arrangement.pop();
        remaining.insert(idx, partner);
    }
    remaining.insert(0, lead);
}

/// `(-1)^(inversion count of the concatenation)` for an ordered list of
/// pairwise disjoint index blocks.
pub fn block_sign(blocks: &[Vec<u8>]) -> Result<i8> {
    let mut concat = Vec::new();
    let mut seen = BTreeSet::new();
    for b in blocks {
        for &v in b {
            if !seen.insert(v) {
                return Err(Error::OverlappingBlocks);
            }
            concat.push(v);
        }
    }
    Ok(if inversions(&concat) % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        // sigma = (1,2), tau = (2,3): (sigma . tau)(3) = sigma(2) = 1.
        let sigma = Permutation::transposition(3, 1, 2);
        let tau = Permutation::transposition(3, 2, 3);
        let st = sigma.compose(&tau);
        assert_eq!(st.apply(3), 1);
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.apply(2), 3);
    }

    #[test]
    fn adjacent_word_reconstructs() {
        for p in Permutation::all(4) {
            let mut acc = Permutation::identity(4);
            for i in p.adjacent_word() {
                acc = acc.compose(&Permutation::transposition(4, i, i + 1));
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn sign_is_multiplicative() {
        for p in Permutation::all(4) {
            for q in Permutation::all(4) {
                assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
            }
        }
    }

    #[test]
    fn jucys_murphy_endpoints() {
        assert!(jucys_murphy(1, 3, false).unwrap().is_zero());
        assert!(jucys_murphy(3, 3, true).unwrap().is_zero());
        let z3 = jucys_murphy(3, 3, false).unwrap();
        let mut expect = GroupAlgebraElement::zero(3);
        expect.add_term(Permutation::transposition(3, 1, 3), rat(1));
        expect.add_term(Permutation::transposition(3, 2, 3), rat(1));
        assert_eq!(z3, expect);
        let z1r = jucys_murphy(1, 3, true).unwrap();
        let mut expect = GroupAlgebraElement::zero(3);
        expect.add_term(Permutation::transposition(3, 1, 2), rat(1));
        expect.add_term(Permutation::transposition(3, 1, 3), rat(1));
        assert_eq!(z1r, expect);
    }

    #[test]
    fn jucys_murphy_commutes_with_lower_symmetric_group() {
        // z_k commutes with every permutation fixing {k, ..., r}; z'_k with
        // every permutation fixing {1, ..., k}.
        for r in 2..=4usize {
            for k in 1..=r {
                let z = jucys_murphy(k, r, false).unwrap();
                for p in Permutation::all(k - 1) {
                    let mut images: Vec<u8> = p.images().to_vec();
                    images.extend(k as u8..=r as u8);
                    let p = Permutation::from_images(images).unwrap();
                    let pe = GroupAlgebraElement::from_permutation(p);
                    assert_eq!(z.convolve(&pe), pe.convolve(&z));
                }
                let z = jucys_murphy(k, r, true).unwrap();
                for p in Permutation::all(r - k) {
                    let mut images: Vec<u8> = (1..=k as u8).collect();
                    images.extend(p.images().iter().map(|&v| v + k as u8));
                    let p = Permutation::from_images(images).unwrap();
                    let pe = GroupAlgebraElement::from_permutation(p);
                    assert_eq!(z.convolve(&pe), pe.convolve(&z));
                }
            }
        }
    }

    #[test]
    fn shuffles_of_four() {
        let shuffles = two_shuffles(&[1, 2, 3, 4]).unwrap();
        assert_eq!(
            shuffles,
            vec![
                (vec![1, 2, 3, 4], 1),
                (vec![1, 3, 2, 4], -1),
                (vec![1, 4, 2, 3], 1),
            ]
        );
    }

    #[test]
    fn shuffle_oracle_exhaustive() {
        // Filter all of S_4 by the two chain conditions and compare.
        let mut expect = Vec::new();
        for p in Permutation::all(4) {
            let w = p.images();
            if w[0] < w[1] && w[2] < w[3] && w[0] < w[2] {
                expect.push((w.to_vec(), p.sign()));
            }
        }
        expect.sort();
        let mut got = two_shuffles(&[1, 2, 3, 4]).unwrap();
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn shuffle_count_is_double_factorial() {
        let mut dfact = 1usize;
        for m in 1..=5usize {
            dfact *= 2 * m - 1;
            let set: Vec<u8> = (1..=2 * m as u8).collect();
            assert_eq!(two_shuffles(&set).unwrap().len(), dfact);
        }
    }

    #[test]
    fn block_sign_by_inversion_oracle() {
        assert_eq!(block_sign(&[vec![1, 2], vec![3, 4]]).unwrap(), 1);
        // inversions of (2,4,1,3) = 3, so the sign is -1.
        assert_eq!(inversions(&[2, 4, 1, 3]), 3);
        assert_eq!(block_sign(&[vec![2, 4], vec![1, 3]]).unwrap(), -1);
        // inversions of (3,1,2) = 2.
        assert_eq!(inversions(&[3, 1, 2]), 2);
        assert_eq!(block_sign(&[vec![3], vec![1, 2]]).unwrap(), 1);
        assert!(block_sign(&[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn convolution_is_associative_seeded() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let perms = Permutation::all(4);
        for _ in 0..200 {
            let mut elems = Vec::new();
            for _ in 0..3 {
                let mut e = GroupAlgebraElement::zero(4);
                for _ in 0..3 {
                    let p = perms[rng.gen_range(0..perms.len())].clone();
                    e.add_term(p, rat(rng.gen_range(-3..=3)));
                }
                elems.push(e);
            }
            let (a, b, c) = (&elems[0], &elems[1], &elems[2]);
            assert_eq!(a.convolve(b).convolve(c), a.convolve(&b.convolve(c)));
        }
    }
}
