use num::Zero;

use crate::error::Result;
use crate::exactalg::{rat, ratio, HMode, NCPoly, Rational, RelationSpec, Side};
use crate::matfun::{
    column_det, increasing_subsets, pfaffian, pfaffian_fullsum, pfaffian_recursive,
    pfaffian_sequence, RingMatrix,
};
use crate::symgroup::{block_sign, two_shuffles, Permutation};
use crate::tensorop::{f_operator, q_operator, MixedSpace, OpChain, OpSum, SparseVec};
use crate::verify::build::x_at;
use crate::verify::report::{
    CheckReport, Ctx, ResourceBounds, TermCounts, Witness, COLUMN_DET_NOTE,
};

/// A generic antisymmetric matrix of independent commuting symbols.
fn antisym_symbols(n: u8) -> Result<(RingMatrix, RelationSpec)> {
    let spec = RelationSpec::turnbull_anti(n, 1, HMode::Symbolic);
    let m = RingMatrix::from_fn(n as usize, n as usize, |i, j| spec.x_poly(i, j))?;
    Ok((m, spec))
}

fn scalar_diff(lhs: &NCPoly, rhs: &NCPoly) -> Option<Witness> {
    lhs.first_diff(rhs).map(|(m, a, b)| Witness::scalar(&m, &a, &b))
}

/// The three Pfaffian definitions agree: 2-shuffle expansion, normalized
/// full sum, and expansion along the first row. `flip_sign` drops the
/// shuffle signs (mutation control).
pub fn check_pf_definitions(n: u8, flip_sign: bool, bounds: &ResourceBounds) -> CheckReport {
    let id = if flip_sign { "mutation-pfaffian-sign" } else { "pf-definitions" };
    let ctx = Ctx::new(id).param("n", n);
    if n % 2 != 0 {
        return ctx.skipped("even size required");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (m, spec) = antisym_symbols(n)?;
        let lhs = if flip_sign {
            // Unsigned matching sum: every shuffle contributes +1.
            let mut acc = NCPoly::zero();
            for (arr, _) in two_shuffles(&(1..=n).collect::<Vec<_>>())? {
                let mut term = NCPoly::one();
                for pair in arr.chunks(2) {
                    term = term.mul_unchecked(
                        m.at(pair[0] as usize - 1, pair[1] as usize - 1),
                        &spec,
                    )?;
                }
                acc += term;
            }
            acc
        } else {
            pfaffian(&m, &spec)?
        };
        let full = pfaffian_fullsum(&m, &spec)?;
        let counts = TermCounts { lhs: lhs.term_count(), rhs: full.term_count() };
        if let Some(w) = scalar_diff(&lhs, &full) {
            return Ok((Some(w), counts));
        }
        let rec = pfaffian_recursive(&m, &spec)?;
        Ok((scalar_diff(&lhs, &rec), counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

/// Laplace-type expansion of a bordered Pfaffian: for block sizes `m`, `n`
/// with `m + n` even,
/// `Pf [[Z, W], [-W^t, Z']] = sum over (I, J) of eps(I,J) Pf(Z_I) Pf(Z'_J)
///  det(W restricted to complementary rows and columns)`.
pub fn check_pf_laplace(m: u8, n: u8, bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("pf-laplace").param("m", m).param("n", n);
    ctx.note(COLUMN_DET_NOTE);
    if (m + n) % 2 != 0 {
        return ctx.skipped("m + n must be even");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let big = m + n;
        let (b, spec) = antisym_symbols(big)?;
        let lhs = pfaffian(&b, &spec)?;
        let top: Vec<u8> = (1..=m).collect();
        let bottom: Vec<u8> = (m + 1..=big).collect();
        let mut rhs = NCPoly::zero();
        for ilen in (0..=m as usize).filter(|l| l % 2 == 0) {
            let k = m as usize - ilen;
            if (n as usize) < k || (n as usize - k) % 2 != 0 {
                continue;
            }
            let jlen = n as usize - k;
            for i_pos in increasing_subsets(m, ilen) {
                for j_pos in increasing_subsets(n, jlen) {
                    let sum_i: i64 = i_pos.iter().map(|&v| v as i64).sum();
                    let sum_j: i64 = j_pos.iter().map(|&v| v as i64).sum();
                    let exp = sum_i
                        + sum_j
                        + binom2(m as i64)
                        + binom2(n as i64)
                        + binom2(k as i64);
                    let sign = if exp % 2 == 0 { rat(1) } else { rat(-1) };
                    let zi = pfaffian(&b.submatrix(&i_pos, &i_pos), &spec)?;
                    let j_actual: Vec<u8> = j_pos.iter().map(|&v| v + m).collect();
                    let zj = pfaffian(&b.submatrix(&j_actual, &j_actual), &spec)?;
                    let rows: Vec<u8> = top.iter().copied().filter(|v| !i_pos.contains(v)).collect();
                    let cols: Vec<u8> = bottom
                        .iter()
                        .copied()
                        .filter(|v| !j_actual.contains(v))
                        .collect();
                    let w = column_det(&b.submatrix(&rows, &cols), &spec)?;
                    let mut term = zi.mul_unchecked(&zj, &spec)?;
                    term = term.mul_unchecked(&w, &spec)?;
                    rhs += term.scaled(&sign);
                }
            }
        }
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        Ok((scalar_diff(&lhs, &rhs), counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The corollary with vanishing lower-right block, in its three regimes
/// (`m > n`, `m = n`, `m < n`).
pub fn check_pf_corollary(m: u8, n: u8, bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("pf-corollary").param("m", m).param("n", n);
    ctx.note(COLUMN_DET_NOTE);
    if (m + n) % 2 != 0 {
        return ctx.skipped("m + n must be even");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let big = m + n;
        let (b, spec) = antisym_symbols(big)?;
        // Zero out the lower-right block.
        let bordered = RingMatrix::from_fn(big as usize, big as usize, |i, j| {
            if i > m && j > m {
                Ok(NCPoly::zero())
            } else {
                Ok(b.at(i as usize - 1, j as usize - 1).clone())
            }
        })?;
        let lhs = pfaffian(&bordered, &spec)?;
        let rhs = if m > n {
            let mut acc = NCPoly::zero();
            for i_pos in increasing_subsets(m, (m - n) as usize) {
                let sum_i: i64 = i_pos.iter().map(|&v| v as i64).sum();
                let sign = if (sum_i + binom2(m as i64)) % 2 == 0 { rat(1) } else { rat(-1) };
                let zi = pfaffian(&b.submatrix(&i_pos, &i_pos), &spec)?;
                let rows: Vec<u8> = (1..=m).filter(|v| !i_pos.contains(v)).collect();
                let cols: Vec<u8> = (m + 1..=big).collect();
                let det = column_det(&b.submatrix(&rows, &cols), &spec)?;
                acc += zi.mul_unchecked(&det, &spec)?.scaled(&sign);
            }
            acc
        } else if m == n {
            let rows: Vec<u8> = (1..=m).collect();
            let cols: Vec<u8> = (m + 1..=big).collect();
            let det = column_det(&b.submatrix(&rows, &cols), &spec)?;
            let sign = if binom2(m as i64) % 2 == 0 { rat(1) } else { rat(-1) };
            det.scaled(&sign)
        } else {
            NCPoly::zero()
        };
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        Ok((scalar_diff(&lhs, &rhs), counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

/// Congruence: `Pf(U^t X U) = det(U) Pf(X)` for a rational matrix `U` and a
/// symbolic antisymmetric `X`.
pub fn check_pf_congruence(n: u8, bounds: &ResourceBounds) -> CheckReport {
    let ctx = Ctx::new("pf-congruence").param("n", n);
    if n % 2 != 0 {
        return ctx.skipped("even size required");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (x, spec) = antisym_symbols(n)?;
        // Two sample transforms: a unimodular-ish integer matrix and a
        // singular one.
        let samples: Vec<Vec<Vec<Rational>>> = vec![
            sample_matrix(n, |i, j| {
                rat(match (i + 2 * j) % 5 {
                    0 => 1,
                    1 => -1,
                    2 => 2,
                    3 => 0,
                    _ => 1,
                }) + if i == j { ratio(1, 2) } else { rat(0) }
            }),
            sample_matrix(n, |i, j| if j == 1 { rat(i as i64) } else { rat((i + j) as i64) }),
        ];
        let mut counts = TermCounts::default();
        for u in samples {
            let transformed = RingMatrix::from_fn(n as usize, n as usize, |i, j| {
                let mut acc = NCPoly::zero();
                for a in 1..=n as usize {
                    for bidx in 1..=n as usize {
                        let c = &u[a - 1][i as usize - 1] * &u[bidx - 1][j as usize - 1];
                        if c.is_zero() {
                            continue;
                        }
                        acc += x.at(a - 1, bidx - 1).scaled(&c);
                    }
                }
                Ok(acc)
            })?;
            let lhs = pfaffian(&transformed, &spec)?;
            let det_u = numeric_det(&u);
            let rhs = pfaffian(&x, &spec)?.scaled(&det_u);
            counts.lhs += lhs.term_count();
            counts.rhs += rhs.term_count();
            if let Some(w) = scalar_diff(&lhs, &rhs) {
                return Ok((Some(w), counts));
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

fn sample_matrix(n: u8, f: impl Fn(usize, usize) -> Rational) -> Vec<Vec<Rational>> {
    (1..=n as usize).map(|i| (1..=n as usize).map(|j| f(i, j)).collect()).collect()
}

fn numeric_det(u: &[Vec<Rational>]) -> Rational {
    let n = u.len();
    let mut acc = Rational::zero();
    for sigma in Permutation::all(n) {
        let mut term = rat(sigma.sign() as i64);
        for t in 1..=n {
            term *= &u[sigma.apply(t as u8) as usize - 1][t - 1];
        }
        acc += term;
    }
    acc
}

/// Permutation sign rule: `Pf(X[sigma(i), sigma(j)]) = sgn(sigma) Pf(X)`.
pub fn check_pf_permutation(n: u8, bounds: &ResourceBounds) -> CheckReport {
    let ctx = Ctx::new("pf-permutation").param("n", n);
    if n % 2 != 0 {
        return ctx.skipped("even size required");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (x, spec) = antisym_symbols(n)?;
        let pf = pfaffian(&x, &spec)?;
        let mut counts = TermCounts::default();
        for sigma in Permutation::all(n as usize) {
            let seq: Vec<u8> = (1..=n).map(|i| sigma.apply(i)).collect();
            let lhs = pfaffian_sequence(&x, &seq, &spec)?;
            let rhs = pf.scaled(&rat(sigma.sign() as i64));
            counts.lhs += lhs.term_count();
            counts.rhs += rhs.term_count();
            if let Some(w) = scalar_diff(&lhs, &rhs) {
                return Ok((Some(w), counts));
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

/// Alternating rearrangement: for `X` antisymmetric with vanishing `I` block,
/// `Pf(X) = (-1)^(sum_k (n - i_k - r + k)) Pf` of the matrix reordered to
/// put the rows and columns of `I` last (with the zero corner).
pub fn check_pf_alternating(n: u8, subset: &[u8], bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("pf-alternating")
        .param("n", n)
        .param("set", super::capelli::format_list(subset));
    ctx.note(
        "verified on matrices whose I-block vanishes; for general matrices the reordering \
         form is the permutation sign rule",
    );
    if n % 2 != 0 {
        return ctx.skipped("even size required");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (x, spec) = antisym_symbols(n)?;
        // Zero the I x I block.
        let zeroed = RingMatrix::from_fn(n as usize, n as usize, |i, j| {
            if subset.contains(&i) && subset.contains(&j) {
                Ok(NCPoly::zero())
            } else {
                Ok(x.at(i as usize - 1, j as usize - 1).clone())
            }
        })?;
        let lhs = pfaffian(&zeroed, &spec)?;
        let r = subset.len() as i64;
        let mut exp = 0i64;
        for (kk, &ik) in subset.iter().enumerate() {
            exp += n as i64 - ik as i64 - r + (kk as i64 + 1);
        }
        let order: Vec<u8> = (1..=n)
            .filter(|v| !subset.contains(v))
            .chain(subset.iter().copied())
            .collect();
        let reordered = zeroed.submatrix(&order, &order);
        let rhs = pfaffian(&reordered, &spec)?
            .scaled(&if exp % 2 == 0 { rat(1) } else { rat(-1) });
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        Ok((scalar_diff(&lhs, &rhs), counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

/// Pfaffian minor-sum exchange: for every `t` and column set `J` of size
/// `n - 2p - 2`,
/// `sum over |I| = 2p+2 of sgn(I, I^c) Pf(Y_I) det(Y[rows J, cols I^c])`
/// equals
/// `sum over |I| = 2p, t not in I, of sgn(t, I, I^c minus t) Pf(Y_I)
///  det(Y[rows (t, J), cols I^c minus t])`.
pub fn check_pf_minor_sum3(n: u8, p: usize, bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("pf-minor-sum3").param("n", n).param("p", p);
    ctx.note(COLUMN_DET_NOTE);
    if n % 2 != 0 || 2 * p + 2 > n as usize {
        return ctx.skipped("need even n and 2p + 2 <= n");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (y, spec) = antisym_symbols(n)?;
        let jlen = n as usize - 2 * p - 2;
        let mut counts = TermCounts::default();
        for t in 1..=n {
            let others: Vec<u8> = (1..=n).filter(|&v| v != t).collect();
            for j_set in subsets_of(&others, jlen) {
                let mut lhs = NCPoly::zero();
                for i_set in increasing_subsets(n, 2 * p + 2) {
                    let comp: Vec<u8> = (1..=n).filter(|v| !i_set.contains(v)).collect();
                    let sign = block_sign(&[i_set.clone(), comp.clone()])?;
                    let pf = pfaffian(&y.submatrix(&i_set, &i_set), &spec)?;
                    let det = column_det(&y.submatrix(&j_set, &comp), &spec)?;
                    lhs += pf.mul_unchecked(&det, &spec)?.scaled(&rat(sign as i64));
                }
                let mut rhs = NCPoly::zero();
                for i_set in subsets_of(&others, 2 * p) {
                    let comp: Vec<u8> =
                        (1..=n).filter(|v| !i_set.contains(v) && *v != t).collect();
                    let sign = block_sign(&[vec![t], i_set.clone(), comp.clone()])?;
                    let pf = pfaffian(&y.submatrix(&i_set, &i_set), &spec)?;
                    let mut rows = vec![t];
                    rows.extend(&j_set);
                    let det = column_det(&y.submatrix(&rows, &comp), &spec)?;
                    rhs += pf.mul_unchecked(&det, &spec)?.scaled(&rat(sign as i64));
                }
                counts.lhs += lhs.term_count();
                counts.rhs += rhs.term_count();
                if let Some(mut w) = scalar_diff(&lhs, &rhs) {
                    w.location = Some(crate::verify::report::WitnessLocation {
                        sigma: None,
                        out_index: vec![t],
                        in_index: j_set.clone(),
                    });
                    return Ok((Some(w), counts));
                }
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

/// Vanishing minor sum: for every `t` and `J` of size `n - 2p - 1`,
/// `sum over |I| = 2p, t not in I, of sgn(I, I^c minus t) Pf(Y_I)
///  det(Y[rows J, cols I^c minus t]) = 0`.
pub fn check_pf_minor_sum6(n: u8, p: usize, bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("pf-minor-sum6").param("n", n).param("p", p);
    ctx.note(COLUMN_DET_NOTE);
    if n % 2 != 0 || 2 * p + 1 > n as usize {
        return ctx.skipped("need even n and 2p + 1 <= n");
    }
    let _ = bounds;
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let (y, spec) = antisym_symbols(n)?;
        let jlen = n as usize - 2 * p - 1;
        let mut counts = TermCounts::default();
        for t in 1..=n {
            let others: Vec<u8> = (1..=n).filter(|&v| v != t).collect();
            for j_set in subsets_of(&others, jlen) {
                let mut acc = NCPoly::zero();
                for i_set in subsets_of(&others, 2 * p) {
                    let comp: Vec<u8> =
                        (1..=n).filter(|v| !i_set.contains(v) && *v != t).collect();
                    let sign = block_sign(&[i_set.clone(), comp.clone()])?;
                    let pf = pfaffian(&y.submatrix(&i_set, &i_set), &spec)?;
                    let det = column_det(&y.submatrix(&j_set, &comp), &spec)?;
                    acc += pf.mul_unchecked(&det, &spec)?.scaled(&rat(sign as i64));
                }
                counts.lhs += acc.term_count();
                let bad = acc.terms().next().map(|(mono, c)| Witness::scalar(mono, c, &rat(0)));
                if let Some(mut w) = bad {
                    w.location = Some(crate::verify::report::WitnessLocation {
                        sigma: None,
                        out_index: vec![t],
                        in_index: j_set.clone(),
                    });
                    return Ok((Some(w), counts));
                }
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

fn subsets_of(items: &[u8], len: usize) -> Vec<Vec<u8>> {
    use itertools::Itertools;
    items.iter().copied().combinations(len).collect()
}

/// Action identity for the pairing operators: on every basis vector
/// `e_{i_1..i_{2m}}`,
/// `Q^(1,2) ... Q^(2m-1,2m) X_2 X_4 ... X_{2m} F_m e`
/// equals `Pf(X over the index sequence)` times
/// `Q^(1,2) ... Q^(2m-1,2m) e_{i_1,i_1,i_3,i_3,...}`.
pub fn check_pf_fg_action(m: usize, n: u8, bounds: &ResourceBounds) -> CheckReport {
    let ctx = Ctx::new("pf-fg-action").param("m", m).param("n", n);
    if (n as usize).pow(2 * m as u32) > bounds.max_tensor_dim {
        return ctx.skipped("tensor dimension bound");
    }
    let spec = RelationSpec::huks(n, Side::X);
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let space = MixedSpace::uniform(n, 2 * m);
        let x = crate::verify::build::x_ring_matrix(&spec)?;
        let mut factors = Vec::new();
        for t in 1..=m {
            factors.push(q_operator(2 * t - 1, 2 * t, &space)?);
        }
        for t in 1..=m {
            factors.push(x_at(&spec, 2 * t, &space)?);
        }
        factors.push(f_operator(m, &space)?);
        let lhs_sum = OpSum::new(vec![OpChain::new(factors)]);

        let mut q_chain = Vec::new();
        for t in 1..=m {
            q_chain.push(q_operator(2 * t - 1, 2 * t, &space)?);
        }
        let mut counts = TermCounts::default();
        for idx in space.basis() {
            let lhs = lhs_sum.eval_column(&idx, &spec)?;
            let pf = pfaffian_sequence(&x, &idx, &spec)?;
            let doubled: Vec<u8> = (0..2 * m)
                .map(|pos| idx[if pos % 2 == 0 { pos } else { pos - 1 }])
                .collect();
            let mut rhs: SparseVec = SparseVec::new();
            rhs.insert(doubled, pf);
            for op in q_chain.iter().rev() {
                rhs = op.apply_vec(&rhs, &spec)?;
            }
            counts.lhs += lhs.values().map(NCPoly::term_count).sum::<usize>();
            counts.rhs += rhs.values().map(NCPoly::term_count).sum::<usize>();
            let mut keys: Vec<&Vec<u8>> = lhs.keys().chain(rhs.keys()).collect();
            keys.sort();
            keys.dedup();
            for kk in keys {
                let a = lhs.get(kk).cloned().unwrap_or_else(NCPoly::zero);
                let b = rhs.get(kk).cloned().unwrap_or_else(NCPoly::zero);
                if let Some((mono, ca, cb)) = a.first_diff(&b) {
                    return Ok((
                        Some(Witness::located(&mono, &ca, &cb, None, kk, &idx)),
                        counts,
                    ));
                }
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((w, counts)) => ctx.resolve(w, counts),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::Status;

    fn bounds() -> ResourceBounds {
        ResourceBounds::default()
    }

    #[test]
    fn definitions_agree() {
        let r = check_pf_definitions(4, false, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
        let r = check_pf_definitions(4, true, &bounds());
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn laplace_two_two() {
        let r = check_pf_laplace(2, 2, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn laplace_odd_blocks() {
        let r = check_pf_laplace(3, 1, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
        let r = check_pf_laplace(1, 3, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn corollary_regimes() {
        for (m, n) in [(4u8, 2u8), (3, 3), (2, 4)] {
            let r = check_pf_corollary(m, n, &bounds());
            assert_eq!(r.status, Status::Pass, "(m,n)=({m},{n}) {:?}", r.witness);
        }
    }

    #[test]
    fn congruence_and_permutation() {
        let r = check_pf_congruence(4, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
        let r = check_pf_permutation(4, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn alternating_pairs() {
        for set in [[1u8, 2], [2, 4], [3, 4], [1, 3]] {
            let r = check_pf_alternating(4, &set, &bounds());
            assert_eq!(r.status, Status::Pass, "set {set:?} {:?}", r.witness);
        }
    }

    #[test]
    fn minor_sums_small() {
        for p in [0usize, 1] {
            let r = check_pf_minor_sum3(4, p, &bounds());
            assert_eq!(r.status, Status::Pass, "p={p} {:?}", r.witness);
            let r = check_pf_minor_sum6(4, p, &bounds());
            assert_eq!(r.status, Status::Pass, "p={p} {:?}", r.witness);
        }
    }

    #[test]
    fn fg_action_small() {
        let r = check_pf_fg_action(1, 2, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
        let r = check_pf_fg_action(2, 2, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }
}
