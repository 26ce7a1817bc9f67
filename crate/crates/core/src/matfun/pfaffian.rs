use std::collections::BTreeSet;



use super::RingMatrix;
use crate::error::{Error, Result};
use crate::exactalg::{rat, ratio, GenKind, NCPoly, RelationSpec};
use crate::symgroup::{two_shuffles, Permutation};

fn check_antisymmetric(m: &RingMatrix) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    for i in 0..m.rows() {
        for j in i..m.cols() {
            let mut s = m.at(i, j).clone();
            s += m.at(j, i);
            if !s.is_zero() {
                return Err(Error::NotAntisymmetric { row: i + 1, col: j + 1 });
            }
        }
    }
    Ok(())
}

/// Entries must live in a single commuting alphabet: polynomials in the
/// X generators only, or in the Y generators only (constants always allowed).
fn check_commuting_entries(m: &RingMatrix) -> Result<()> {
    let mut kinds: BTreeSet<GenKind> = BTreeSet::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for (mono, _) in m.at(i, j).terms() {
                kinds.extend(mono.kinds());
            }
        }
    }
    kinds.remove(&GenKind::HScalar);
    if kinds.len() > 1 || kinds.contains(&GenKind::H) {
        return Err(Error::NonCommutingEntries);
    }
    Ok(())
}

/// Pfaffian of an even antisymmetric matrix with pairwise-commuting entries,
/// via the 2-shuffle expansion: one product of entries per perfect matching,
/// signed by the shuffle.
pub fn pfaffian(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    check_antisymmetric(m)?;
    if m.rows() % 2 != 0 {
        return Err(Error::OddSize(m.rows()));
    }
    check_commuting_entries(m)?;
    pfaffian_unchecked(m, spec)
}

fn pfaffian_unchecked(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    if m.rows() == 0 {
        return Ok(NCPoly::one());
    }
    let positions: Vec<u8> = (1..=m.rows() as u8).collect();
    let mut acc = NCPoly::zero();
    for (arr, sign) in two_shuffles(&positions)? {
        let mut term = NCPoly::constant(rat(sign as i64));
        for pair in arr.chunks(2) {
            term = term.mul_unchecked(
                m.at(pair[0] as usize - 1, pair[1] as usize - 1),
                spec,
            )?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Pfaffian over an index sequence: entry `(a, b)` of the sampled matrix is
/// `m[seq[a], seq[b]]` (1-based). Repeated indices give a zero Pfaffian.
pub fn pfaffian_sequence(m: &RingMatrix, seq: &[u8], spec: &RelationSpec) -> Result<NCPoly> {
    let sampled = m.submatrix(seq, seq);
    if sampled.rows() % 2 != 0 {
        return Err(Error::OddSize(sampled.rows()));
    }
    // Antisymmetry of the sample follows from antisymmetry of `m`; repeated
    // indices make rows proportional, which the expansion cancels exactly.
    pfaffian_unchecked(&sampled, spec)
}

/// Full-sum definition: `1/(2^k k!) sum over sigma in S_{2k}` of the signed
/// products `m[sigma(1),sigma(2)] ... m[sigma(2k-1),sigma(2k)]`. Independent
/// of the shuffle expansion; used as a cross-check oracle.
pub fn pfaffian_fullsum(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    check_antisymmetric(m)?;
    if m.rows() % 2 != 0 {
        return Err(Error::OddSize(m.rows()));
    }
    check_commuting_entries(m)?;
    let n = m.rows();
    let k = n / 2;
    let mut acc = NCPoly::zero();
    for sigma in Permutation::all(n) {
        let mut term = NCPoly::constant(rat(sigma.sign() as i64));
        for t in 0..k {
            let a = sigma.apply(2 * t as u8 + 1) as usize - 1;
            let b = sigma.apply(2 * t as u8 + 2) as usize - 1;
            term = term.mul_unchecked(m.at(a, b), spec)?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    let mut norm = ratio(1, 1 << k);
    norm /= crate::exactalg::factorial(k);
    Ok(acc.scaled(&norm))
}

/// Expansion along the first row:
/// `Pf(m) = sum over j of (-1)^j m[1,j] Pf(m without rows/cols 1 and j)`.
pub fn pfaffian_recursive(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
    check_antisymmetric(m)?;
    if m.rows() % 2 != 0 {
        return Err(Error::OddSize(m.rows()));
    }
    check_commuting_entries(m)?;
    fn rec(m: &RingMatrix, spec: &RelationSpec) -> Result<NCPoly> {
        if m.rows() == 0 {
            return Ok(NCPoly::one());
        }
        let mut acc = NCPoly::zero();
        for j in 2..=m.rows() as u8 {
            let rest: Vec<u8> = (2..=m.rows() as u8).filter(|&v| v != j).collect();
            let minor = rec(&m.submatrix(&rest, &rest), spec)?;
            let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
            let mut term = m.at(0, j as usize - 1).scaled(&sign);
            term = term.mul_unchecked(&minor, spec)?;
            acc += term;
        }
        Ok(acc)
    }
    rec(m, spec)
}
