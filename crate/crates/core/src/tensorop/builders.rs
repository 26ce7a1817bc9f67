use super::group_op::GroupOperator;
use super::operator::{vec_add_term, MixedSpace, SparseVec, TensorOperator};
use crate::error::{Error, Result};
use crate::exactalg::{rat, ratio, NCPoly, RelationSpec};
use crate::matfun::RingMatrix;
use crate::symgroup::{block_sign, two_shuffles, Permutation};

/// Permutation of tensor factors: `P^sigma` sends `e_{k_1,...,k_r}` to the
/// basis vector whose `sigma(t)`-th slot holds `k_t`. On two factors,
/// `P^{(1,2)}(u (x) v) = v (x) u`. Satisfies
/// `P^sigma P^tau = P^{sigma tau}`.
pub fn perm_operator(sigma: &Permutation, domain: &MixedSpace) -> TensorOperator {
    let r = domain.factors();
    debug_assert_eq!(sigma.degree(), r);
    let inv = sigma.inverse();
    let codomain = MixedSpace::new(
        (1..=r).map(|i| domain.dim_at(inv.apply(i as u8) as usize)).collect(),
    );
    let mut op = TensorOperator::new(codomain, domain.clone());
    for idx in domain.basis() {
        let out: Vec<u8> = (1..=r).map(|i| idx[inv.apply(i as u8) as usize - 1]).collect();
        op.add_entry(out, idx, NCPoly::one());
    }
    op
}

/// The transposed flip `Q = sum E_ij (x) E_ij` on two equal-dimension
/// factors (1-based positions), identity elsewhere:
/// `Q(e_k (x) e_l) = delta(k,l) sum_i e_i (x) e_i`.
pub fn q_operator(a: usize, b: usize, space: &MixedSpace) -> Result<TensorOperator> {
    let d = space.dim_at(a);
    if d != space.dim_at(b) {
        return Err(Error::DimensionMismatch(format!(
            "Q^({a},{b}) needs equal factor dimensions on {space}"
        )));
    }
    let mut op = TensorOperator::new(space.clone(), space.clone());
    for idx in space.basis() {
        if idx[a - 1] != idx[b - 1] {
            continue;
        }
        for i in 1..=d {
            let mut out = idx.clone();
            out[a - 1] = i;
            out[b - 1] = i;
            op.add_entry(out, idx.clone(), NCPoly::one());
        }
    }
    Ok(op)
}

/// A matrix acting on one tensor factor, identity elsewhere. The factor's
/// dimension must equal the column count and becomes the row count.
pub fn embed_matrix(m: &RingMatrix, pos: usize, domain: &MixedSpace) -> Result<TensorOperator> {
    if domain.dim_at(pos) as usize != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "embedding a {}x{} matrix at factor {pos} of {domain}",
            m.rows(),
            m.cols()
        )));
    }
    let codomain = domain.with_dim_at(pos, m.rows() as u8);
    let mut op = TensorOperator::new(codomain, domain.clone());
    for idx in domain.basis() {
        let j = idx[pos - 1] as usize;
        for i in 1..=m.rows() {
            let e = m.at(i - 1, j - 1);
            if e.is_zero() {
                continue;
            }
            let mut out = idx.clone();
            out[pos - 1] = i as u8;
            op.add_entry(out, idx.clone(), e.clone());
        }
    }
    Ok(op)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Antisymmetrizer,
    Symmetrizer,
}

/// Normalized (anti)symmetrizer over a set of equal-dimension factor
/// positions, identity elsewhere.
pub fn symmetrizer(
    kind: SymKind,
    positions: &[usize],
    space: &MixedSpace,
) -> Result<TensorOperator> {
    let d = space.dim_at(positions[0]);
    if positions.iter().any(|&p| space.dim_at(p) != d) {
        return Err(Error::DimensionMismatch(format!(
            "symmetrizer positions {positions:?} on {space}"
        )));
    }
    let k = positions.len();
    let mut acc = TensorOperator::new(space.clone(), space.clone());
    for tau in Permutation::all(k) {
        // Extend tau on the listed positions to a permutation of all factors.
        let mut images: Vec<u8> = (1..=space.factors() as u8).collect();
        for (t, &p) in positions.iter().enumerate() {
            images[p - 1] = positions[tau.apply(t as u8 + 1) as usize - 1] as u8;
        }
        let full = Permutation::from_images(images).expect("valid extension");
        let sign = match kind {
            SymKind::Antisymmetrizer => tau.sign() as i64,
            SymKind::Symmetrizer => 1,
        };
        acc = acc.add(&perm_operator(&full, space).scaled_rat(&rat(sign)))?;
    }
    let norm = ratio(1, (1..=k as i64).product());
    Ok(acc.scaled_rat(&norm))
}

/// The group-operator `sum over sigma in S_r of sigma (x) P^sigma` on a
/// uniform space.
pub fn epsilon(r: usize, space: &MixedSpace) -> Result<GroupOperator> {
    let d = space.dim_at(1);
    if space.factors() != r || space.dims().iter().any(|&x| x != d) {
        return Err(Error::DimensionMismatch(format!(
            "epsilon needs {r} equal factors, got {space}"
        )));
    }
    let mut go = GroupOperator::zero(r, space.clone(), space.clone());
    for sigma in Permutation::all(r) {
        let p = perm_operator(&sigma, space);
        go.add_term(sigma, p)?;
    }
    Ok(go)
}

/// `F_m = sum over 2-shuffles pi of sgn(pi) P^{pi^{-1}}`, acting on the first
/// `2m` factors of the space.
pub fn f_operator(m: usize, space: &MixedSpace) -> Result<TensorOperator> {
    if space.factors() < 2 * m {
        return Err(Error::DimensionMismatch(format!(
            "F_{m} needs at least {} factors on {space}",
            2 * m
        )));
    }
    let n = space.factors();
    let mut acc = TensorOperator::new(space.clone(), space.clone());
    let positions: Vec<u8> = (1..=2 * m as u8).collect();
    for (arr, sign) in two_shuffles(&positions)? {
        let mut images: Vec<u8> = arr;
        images.extend(2 * m as u8 + 1..=n as u8);
        let pi = Permutation::from_images(images)?;
        acc = acc.add(&perm_operator(&pi.inverse(), space).scaled_rat(&rat(sign as i64)))?;
    }
    Ok(acc)
}

/// `G_m = sum over 2m-subsets I of [n] of sgn(I, I^c) P^{tau_I}` on
/// `(C^d)^{(x) n}`, where `tau_I^{-1}` lists `I` then `I^c` in increasing
/// order. Satisfies `G_m e_{1..n} = sum sgn(I, I^c) e_{I, I^c}`.
pub fn g_operator(m: usize, space: &MixedSpace) -> Result<TensorOperator> {
    let n = space.factors();
    if 2 * m > n {
        return Err(Error::DimensionMismatch(format!("G_{m} needs 2m <= {n}")));
    }
    let mut acc = TensorOperator::new(space.clone(), space.clone());
    for subset in crate::matfun::increasing_subsets(n as u8, 2 * m) {
        let complement: Vec<u8> = (1..=n as u8).filter(|v| !subset.contains(v)).collect();
        let mut listing = subset.clone();
        listing.extend(complement.iter().copied());
        let tau = Permutation::from_images(listing)?.inverse();
        let sign = block_sign(&[subset, complement])?;
        acc = acc.add(&perm_operator(&tau, space).scaled_rat(&rat(sign as i64)))?;
    }
    Ok(acc)
}

/// One product chain `coeff * A_1 A_2 ... A_k` of tensor operators, applied
/// rightmost factor first.
#[derive(Clone)]
pub struct OpChain {
    pub coeff: NCPoly,
    pub factors: Vec<TensorOperator>,
}

impl OpChain {
    pub fn new(factors: Vec<TensorOperator>) -> Self {
        OpChain { coeff: NCPoly::one(), factors }
    }

    pub fn scaled(factors: Vec<TensorOperator>, coeff: NCPoly) -> Self {
        OpChain { coeff, factors }
    }
}

/// A sum of operator chains evaluated column by column, for identities on
/// spaces too large to materialize as full products.
#[derive(Clone)]
pub struct OpSum {
    pub chains: Vec<OpChain>,
}

impl OpSum {
    pub fn new(chains: Vec<OpChain>) -> Self {
        OpSum { chains }
    }

    pub fn eval_column(&self, idx: &[u8], spec: &RelationSpec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for chain in &self.chains {
            if chain.coeff.is_zero() {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(idx.to_vec(), chain.coeff.clone());
            for op in chain.factors.iter().rev() {
                v = op.apply_vec(&v, spec)?;
                if v.is_empty() {
                    break;
                }
            }
            for (k, p) in v {
                vec_add_term(&mut out, k, p);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::HMode;

    #[test]
    fn flip_on_two_factors() {
        let space = MixedSpace::uniform(2, 2);
        let p = perm_operator(&Permutation::transposition(2, 1, 2), &space);
        // P(e_1 (x) e_2) = e_2 (x) e_1
        assert_eq!(p.coefficient(&[2, 1], &[1, 2]), NCPoly::one());
        assert!(p.coefficient(&[1, 2], &[1, 2]).is_zero());
        let id = perm_operator(&Permutation::identity(2), &space);
        assert_eq!(id, TensorOperator::identity(&space));
    }

    #[test]
    fn perm_operators_compose_like_permutations() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let space = MixedSpace::uniform(2, 3);
        for sigma in Permutation::all(3) {
            for tau in Permutation::all(3) {
                let ps = perm_operator(&sigma, &space);
                let pt = perm_operator(&tau, &space);
                let prod = ps.compose(&pt, &spec).unwrap();
                assert_eq!(prod, perm_operator(&sigma.compose(&tau), &space));
            }
        }
    }

    #[test]
    fn perm_operator_on_mixed_dims() {
        // P_(s x m): C^3 (x) C^2 -> C^2 (x) C^3.
        let space = MixedSpace::new(vec![3, 2]);
        let p = perm_operator(&Permutation::transposition(2, 1, 2), &space);
        assert_eq!(p.codomain().dims(), &[2, 3]);
        assert_eq!(p.coefficient(&[2, 3], &[3, 2]), NCPoly::one());
    }

    #[test]
    fn q_operator_action() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let space = MixedSpace::uniform(2, 2);
        let q = q_operator(1, 2, &space).unwrap();
        let v = q.apply_basis(&[1, 1], &spec).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[&vec![1, 1]], NCPoly::one());
        assert_eq!(v[&vec![2, 2]], NCPoly::one());
        assert!(q.apply_basis(&[1, 2], &spec).unwrap().is_empty());
    }

    #[test]
    fn q_squared_is_n_q_and_pq_is_q() {
        let spec = RelationSpec::capelli(3, 3, 3, HMode::Symbolic);
        for n in 2..=3u8 {
            let space = MixedSpace::uniform(n, 2);
            let q = q_operator(1, 2, &space).unwrap();
            let q2 = q.compose(&q, &spec).unwrap();
            assert_eq!(q2, q.scaled_rat(&rat(n as i64)));
            let p = perm_operator(&Permutation::transposition(2, 1, 2), &space);
            assert_eq!(p.compose(&q, &spec).unwrap(), q);
        }
    }

    #[test]
    fn symmetrizers_are_idempotent() {
        let spec = RelationSpec::capelli(3, 3, 3, HMode::Symbolic);
        for d in 2..=3u8 {
            for r in 2..=3usize {
                let space = MixedSpace::uniform(d, r);
                let positions: Vec<usize> = (1..=r).collect();
                for kind in [SymKind::Antisymmetrizer, SymKind::Symmetrizer] {
                    let a = symmetrizer(kind, &positions, &space).unwrap();
                    assert_eq!(a.compose(&a, &spec).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn antisymmetrizer_kills_repeated_indices() {
        let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
        let space = MixedSpace::uniform(2, 2);
        let a = symmetrizer(SymKind::Antisymmetrizer, &[1, 2], &space).unwrap();
        assert!(a.apply_basis(&[1, 1], &spec).unwrap().is_empty());
    }

    #[test]
    fn f_one_is_identity() {
        let space = MixedSpace::uniform(2, 2);
        let f = f_operator(1, &space).unwrap();
        assert_eq!(f, TensorOperator::identity(&space));
    }

    #[test]
    fn g_action_on_ordered_basis_vector() {
        let spec = RelationSpec::capelli(4, 4, 4, HMode::Symbolic);
        let space = MixedSpace::uniform(4, 4);
        let g = g_operator(1, &space).unwrap();
        let v = g.apply_basis(&[1, 2, 3, 4], &spec).unwrap();
        // sum over 2-subsets I of sgn(I, I^c) e_{I, I^c}: 6 terms.
        assert_eq!(v.len(), 6);
        assert_eq!(v[&vec![1, 2, 3, 4]], NCPoly::one());
        // I = {2,3}: sgn((2,3,1,4)) = +1.
        assert_eq!(v[&vec![2, 3, 1, 4]], NCPoly::one());
        // I = {1,3}: sgn((1,3,2,4)) = -1.
        assert_eq!(v[&vec![1, 3, 2, 4]], NCPoly::constant(rat(-1)));
    }
}
