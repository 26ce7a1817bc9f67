//! Shared constructors for the operator expressions appearing in the
//! identities: embedded matrix factors, the four expressions of the Capelli
//! operator identity, Turnbull product sides, and the pairing operator
//! `Psi` attached to a pair of standard tableaux.

use crate::error::Result;
use crate::exactalg::{rat, NCPoly, RelationSpec};
use crate::matfun::RingMatrix;
use crate::symgroup::{jucys_murphy, GroupAlgebraElement, Permutation, SeminormalRep};
use crate::tensorop::{
    embed_matrix, epsilon, perm_operator, symmetrizer, GroupOperator, MixedSpace, SymKind,
    TensorOperator,
};

pub fn x_ring_matrix(spec: &RelationSpec) -> Result<RingMatrix> {
    let (r, c) = spec.x_dims();
    RingMatrix::from_fn(r as usize, c as usize, |i, j| spec.x_poly(i, j))
}

pub fn y_ring_matrix(spec: &RelationSpec) -> Result<RingMatrix> {
    let (r, c) = spec.y_dims();
    RingMatrix::from_fn(r as usize, c as usize, |i, j| spec.y_poly(i, j))
}

pub fn h_ring_matrix(spec: &RelationSpec) -> Result<RingMatrix> {
    let (r, c) = spec.h_dims();
    RingMatrix::from_fn(r as usize, c as usize, |i, j| spec.h_entry(i, j))
}

/// `(XY)[i,k] = sum_j X[i,j] Y[j,k]`, already in normal order.
pub fn xy_entry(spec: &RelationSpec, i: u8, k: u8) -> Result<NCPoly> {
    let (_, inner) = spec.x_dims();
    let mut acc = NCPoly::zero();
    for j in 1..=inner {
        let x = spec.x_poly(i, j)?;
        acc += x.mul_unchecked(&spec.y_poly(j, k)?, spec)?;
    }
    Ok(acc)
}

pub fn xy_ring_matrix(spec: &RelationSpec) -> Result<RingMatrix> {
    let (n, _) = spec.x_dims();
    let (_, s) = spec.y_dims();
    RingMatrix::from_fn(n as usize, s as usize, |i, k| xy_entry(spec, i, k))
}

/// `(XY)[i_a, k_t] + shift entries`: the `t`-th column carries the diagonal
/// shift `shifts[t-1] * H[i_a, k_t]`-style polynomial addend supplied by
/// the caller via a closure.
pub fn matrix_from_indices<F>(rows: &[u8], cols: &[u8], mut entry: F) -> Result<RingMatrix>
where
    F: FnMut(u8, u8, usize, usize) -> Result<NCPoly>,
{
    let mut m = RingMatrix::zero(rows.len(), cols.len());
    for (a, &i) in rows.iter().enumerate() {
        for (t, &k) in cols.iter().enumerate() {
            m.set(a, t, entry(i, k, a, t)?);
        }
    }
    Ok(m)
}

/// Embedded single-factor operators over a given domain space.
pub fn x_at(spec: &RelationSpec, pos: usize, domain: &MixedSpace) -> Result<TensorOperator> {
    embed_matrix(&x_ring_matrix(spec)?, pos, domain)
}

pub fn y_at(spec: &RelationSpec, pos: usize, domain: &MixedSpace) -> Result<TensorOperator> {
    embed_matrix(&y_ring_matrix(spec)?, pos, domain)
}

pub fn h_at(spec: &RelationSpec, pos: usize, domain: &MixedSpace) -> Result<TensorOperator> {
    embed_matrix(&h_ring_matrix(spec)?, pos, domain)
}

/// `X_pos Y_pos` as one tensor operator (the factor's dimension runs
/// `s -> m -> n`).
pub fn xy_at(spec: &RelationSpec, pos: usize, domain: &MixedSpace) -> Result<TensorOperator> {
    let y = y_at(spec, pos, domain)?;
    let x = x_at(spec, pos, y.codomain())?;
    x.compose(&y, spec)
}

/// The four expressions of the Capelli operator identity over
/// `Capelli(n,m,s)` with `r` tensor factors, as elements of
/// (group algebra of `S_r`) (x) Hom((C^s)^r, (C^n)^r):
///
/// 1. `(X_1 Y_1)(X_2 Y_2 - z_2 (x) H_2) ... (X_r Y_r - z_r (x) H_r) E`
/// 2. `E (X_1 Y_1 - z'_1 (x) H_1) ... (X_{r-1} Y_{r-1} - z'_{r-1} (x) H_{r-1}) (X_r Y_r)`
/// 3. `X_1 ... X_r Y_1 ... Y_r E`
/// 4. `E X_1 ... X_r Y_1 ... Y_r`
///
/// `z_shift` adds `z_shift * identity` to every Jucys-Murphy element; zero
/// for the genuine identity, nonzero for mutation controls.
pub fn cape_exprs(spec: &RelationSpec, r: usize, z_shift: i64) -> Result<[GroupOperator; 4]> {
    let (n, _) = spec.x_dims();
    let (_, s) = spec.y_dims();
    let dom = MixedSpace::uniform(s, r);
    let cod = MixedSpace::uniform(n, r);
    let eps_s = epsilon(r, &dom)?;
    let eps_n = epsilon(r, &cod)?;

    let jm = |k: usize, reversed: bool| -> Result<GroupAlgebraElement> {
        let mut z = jucys_murphy(k, r, reversed)?;
        if z_shift != 0 {
            z = z.add(
                &GroupAlgebraElement::from_permutation(Permutation::identity(r))
                    .scaled(&rat(z_shift)),
            );
        }
        Ok(z)
    };

    // Factor k of expression 1 or 2, acting on `space` (factor k has
    // dimension s before, n after).
    let factor = |k: usize, space: &MixedSpace, reversed: bool| -> Result<GroupOperator> {
        let xy = xy_at(spec, k, space)?;
        let mut go = GroupOperator::from_tensor(r, xy);
        let z = jm(k, reversed)?;
        if !z.is_zero() {
            let h = h_at(spec, k, space)?;
            go = go.sub(&GroupOperator::from_group_algebra(&z, &h))?;
        }
        Ok(go)
    };

    // Expression 1: right-to-left, E first, then factors r down to 1.
    let mut e1 = eps_s.clone();
    for k in (1..=r).rev() {
        let f = factor(k, e1.codomain(), false)?;
        e1 = f.compose(&e1, spec)?;
    }

    // Expression 2: X_r Y_r first, then factors r-1 down to 1 with reverse
    // Jucys-Murphy elements, then E on the converted space.
    let mut e2 = GroupOperator::from_tensor(r, xy_at(spec, r, &dom)?);
    for k in (1..r).rev() {
        let f = factor(k, e2.codomain(), true)?;
        e2 = f.compose(&e2, spec)?;
    }
    e2 = eps_n.compose(&e2, spec)?;

    // X_1 ... X_r Y_1 ... Y_r as a group operator with identity group part.
    let mut xy_all = GroupOperator::from_tensor(r, TensorOperator::identity(&dom));
    for k in (1..=r).rev() {
        let y = y_at(spec, k, xy_all.codomain())?;
        xy_all = GroupOperator::from_tensor(r, y).compose(&xy_all, spec)?;
    }
    for k in (1..=r).rev() {
        let x = x_at(spec, k, xy_all.codomain())?;
        xy_all = GroupOperator::from_tensor(r, x).compose(&xy_all, spec)?;
    }

    let e3 = xy_all.compose(&eps_s, spec)?;
    let e4 = eps_n.compose(&xy_all, spec)?;
    Ok([e1, e2, e3, e4])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TurnbullKind {
    /// Symmetric `X`, antisymmetrizer, determinants.
    SymDet,
    /// Antisymmetric `X`, symmetrizer, permanents.
    AntiPer,
}

/// Both sides of the Turnbull operator identity
/// `A_r (X_1 Y_1 + (r-1) H_1) ... (X_r Y_r) = A_r X_1 ... X_r Y_1 ... Y_r`
/// (symmetrizer `S_r` in the antisymmetric case). `shift_sign` is `+1` for
/// the genuine identity, `-1` flips the `H` shifts for mutation controls.
pub fn turnbull_sides(
    spec: &RelationSpec,
    kind: TurnbullKind,
    r: usize,
    shift_sign: i64,
) -> Result<(TensorOperator, TensorOperator)> {
    let (n, _) = spec.x_dims();
    let (_, m) = spec.y_dims();
    let dom = MixedSpace::uniform(m, r);
    let cod = MixedSpace::uniform(n, r);
    let proj_kind = match kind {
        TurnbullKind::SymDet => SymKind::Antisymmetrizer,
        TurnbullKind::AntiPer => SymKind::Symmetrizer,
    };
    let positions: Vec<usize> = (1..=r).collect();
    let proj = symmetrizer(proj_kind, &positions, &cod)?;

    let mut lhs: Option<TensorOperator> = None;
    for k in (1..=r).rev() {
        let space = match &lhs {
            None => dom.clone(),
            Some(op) => op.codomain().clone(),
        };
        let mut f = xy_at(spec, k, &space)?;
        let shift = (r - k) as i64 * shift_sign;
        if shift != 0 {
            let h = h_at(spec, k, &space)?;
            f = f.add(&h.scaled_rat(&rat(shift)))?;
        }
        lhs = Some(match lhs {
            None => f,
            Some(op) => f.compose(&op, spec)?,
        });
    }
    let lhs = proj.compose(&lhs.expect("r >= 1"), spec)?;

    let mut rhs = TensorOperator::identity(&dom);
    for k in (1..=r).rev() {
        let y = y_at(spec, k, rhs.codomain())?;
        rhs = y.compose(&rhs, spec)?;
    }
    for k in (1..=r).rev() {
        let x = x_at(spec, k, rhs.codomain())?;
        rhs = x.compose(&rhs, spec)?;
    }
    let rhs = proj.compose(&rhs, spec)?;
    Ok((lhs, rhs))
}

/// `Psi_{T T'} = sum over sigma of <v_{T'}, sigma^{-1} v_T> P^sigma` on a
/// uniform space, with the inner product given by the seminormal Gram form:
/// `<v_{T'}, sigma^{-1} v_T> = gram(T') * phi(sigma^{-1})[T', T]`.
pub fn psi_operator(
    rep: &SeminormalRep,
    t_index: usize,
    t_prime_index: usize,
    space: &MixedSpace,
    scale: &crate::exactalg::Rational,
) -> Result<TensorOperator> {
    let r = rep.degree();
    let mut acc = TensorOperator::new(space.clone(), space.clone());
    for sigma in Permutation::all(r) {
        let phi_inv = rep.matrix(&sigma.inverse());
        let coeff =
            rep.gram()[t_prime_index].clone() * phi_inv.at(t_prime_index, t_index) * scale;
        if num::Zero::is_zero(&coeff) {
            continue;
        }
        let p = perm_operator(&sigma, space).scaled_rat(&coeff);
        acc = acc.add(&p)?;
    }
    Ok(acc)
}
