use crate::error::Result;
use crate::exactalg::{apply_weyl, rat, HMode, NCPoly, Rational, RelationSpec, XPoly};
use crate::matfun::{
    column_det, nondecreasing_sequences, schur_scalar, v_multiplicity, BlockMatrix, PolyMat,
    RingMatrix,
};
use crate::symgroup::{jucys_murphy, SeminormalRep, StandardTableau};
use crate::tensorop::MixedSpace;
use crate::verify::build::{
    cape_exprs, h_ring_matrix, psi_operator, x_ring_matrix, xy_at, xy_entry, y_ring_matrix,
};
use crate::verify::report::{
    CheckReport, Ctx, ResourceBounds, TermCounts, Witness, CENTRAL_H_NOTE, COLUMN_DET_NOTE,
};

pub fn hmode_name(hmode: &HMode) -> &'static str {
    match hmode {
        HMode::Symbolic => "symbolic",
        HMode::Identity => "identity",
        HMode::ScalarH => "scalar-h",
        HMode::Numeric(_) => "numeric",
    }
}

/// The Capelli operator identity for immanants: all four expressions agree
/// as group operators. `z_shift != 0` is the mutation control that offsets
/// every Jucys-Murphy element.
pub fn check_capelli_general(
    n: u8,
    m: u8,
    s: u8,
    r: usize,
    hmode: HMode,
    z_shift: i64,
    bounds: &ResourceBounds,
) -> CheckReport {
    let id = if z_shift == 0 { "capelli-general" } else { "mutation-capelli-zshift" };
    let mut ctx = Ctx::new(id)
        .param("n", n)
        .param("m", m)
        .param("s", s)
        .param("r", r)
        .param("hmode", hmode_name(&hmode));
    ctx.note(CENTRAL_H_NOTE);
    let dim = (n.max(m).max(s) as usize).pow(r as u32);
    if dim > bounds.max_tensor_dim {
        return ctx.skipped(format!("tensor dimension {dim} exceeds bound"));
    }
    let spec = RelationSpec::capelli(n, m, s, hmode);
    if m == 1 && r > 1 {
        ctx.note("m=1, r>1: the auxiliary hypothesis X_1 H_2 = H_2 X_1 holds automatically (H is central in this model)");
    }
    let exprs = match cape_exprs(&spec, r, z_shift) {
        Ok(e) => e,
        Err(err) => return ctx.skipped(err.to_string()),
    };
    let counts = TermCounts { lhs: exprs[0].term_count(), rhs: exprs[3].term_count() };
    if counts.lhs.max(counts.rhs) > bounds.max_terms_per_side {
        return ctx.skipped("term count exceeds bound");
    }
    let names = ["e1", "e2", "e3", "e4"];
    for a in 0..4 {
        for b in a + 1..4 {
            if let Some((sigma, out, input, mono, ca, cb)) = exprs[a].first_diff(&exprs[b]) {
                ctx.note(format!("expressions {} and {} differ", names[a], names[b]));
                let w = Witness::located(&mono, &ca, &cb, Some(&sigma), &out, &input);
                return ctx.fail(w, counts);
            }
        }
    }
    ctx.pass(counts)
}

/// Scalar Capelli identity for the Schur matrix function (Williamson's
/// identity deformed by the parameter matrix `H`): compares the block-matrix
/// reading of the left side and the coefficient extracted from the operator
/// identity against the right-hand sum, recording both verdicts.
#[allow(clippy::too_many_arguments)]
pub fn check_williamson(
    n: u8,
    m: u8,
    s: u8,
    shape: &[u8],
    upper: &[u8],
    lower: &[u8],
    hmode: HMode,
    drop_multiplicity: bool,
    bounds: &ResourceBounds,
) -> CheckReport {
    let id = if drop_multiplicity { "mutation-williamson-vdrop" } else { "williamson" };
    let mut ctx = Ctx::new(id)
        .param("n", n)
        .param("m", m)
        .param("s", s)
        .param("shape", format_list(shape))
        .param("upper", format_list(upper))
        .param("lower", format_list(lower))
        .param("hmode", hmode_name(&hmode));
    ctx.note(CENTRAL_H_NOTE);
    match run_williamson(n, m, s, shape, upper, lower, hmode, drop_multiplicity, bounds, &mut ctx)
    {
        Ok(report) => report(ctx),
        Err(err) => ctx.skipped(err.to_string()),
    }
}

type Finisher = Box<dyn FnOnce(Ctx) -> CheckReport>;

#[allow(clippy::too_many_arguments)]
fn run_williamson(
    n: u8,
    m: u8,
    s: u8,
    shape: &[u8],
    upper: &[u8],
    lower: &[u8],
    hmode: HMode,
    drop_multiplicity: bool,
    bounds: &ResourceBounds,
    ctx: &mut Ctx,
) -> Result<Finisher> {
    let r = crate::symgroup::partition_size(shape);
    let spec = RelationSpec::capelli(n, m, s, hmode);
    let rep = SeminormalRep::build(shape)?;
    if upper.len() != r || lower.len() != r {
        return Err(crate::error::Error::BadShape(format!(
            "index tuples must have length {r}"
        )));
    }
    let dim = (n.max(m).max(s) as usize).pow(r as u32);
    if dim > bounds.max_tensor_dim {
        return Err(crate::error::Error::Unsupported("tensor dimension bound".into()));
    }

    // Right side: sum over non-decreasing J of 1/v(J) d^phi(X_IJ) d^phi(Y_JK).
    let x = x_ring_matrix(&spec)?;
    let y = y_ring_matrix(&spec)?;
    let mut rhs = PolyMat::zero(rep.dim());
    for j in nondecreasing_sequences(m, r) {
        let dx = schur_scalar(&rep, &x.submatrix(upper, &j), &spec)?;
        let dy = schur_scalar(&rep, &y.submatrix(&j, lower), &spec)?;
        let mut term = dx.mul(&dy, &spec)?;
        if !drop_multiplicity {
            let v = v_multiplicity(&j)?;
            term = term.scaled(&NCPoly::constant(Rational::from_integer(1.into()) / v), &spec)?;
        }
        rhs = rhs.add(&term);
    }

    // Block-matrix reading of the left side: entry (a, t) is
    // (XY)[i_a, k_t] Id - phi(z'_a) H[i_a, k_t].
    let h = h_ring_matrix(&spec)?;
    let mut block = BlockMatrix::from_blocks(
        r,
        rep.dim(),
        vec![PolyMat::zero(rep.dim()); r * r],
    )?;
    for (a, &ia) in upper.iter().enumerate() {
        let z = rep.matrix_of(&jucys_murphy(a + 1, r, true)?);
        for (t, &kt) in lower.iter().enumerate() {
            let xy = xy_entry(&spec, ia, kt)?;
            let hterm = PolyMat::from_qmat(&z)
                .scaled(h.at(ia as usize - 1, kt as usize - 1), &spec)?;
            block.set(a, t, PolyMat::scalar(rep.dim(), &xy).sub(&hterm));
        }
    }
    let block_lhs = crate::matfun::schur_matrix_function(&rep, &block, &spec)?;

    // Operator-extracted reading: apply phi to the operator identity and
    // compare the (I, K) coefficient.
    let exprs = cape_exprs(&spec, r, 0)?;
    let apply_phi = |coeffs: Vec<(crate::symgroup::Permutation, NCPoly)>| -> Result<PolyMat> {
        let mut acc = PolyMat::zero(rep.dim());
        for (sigma, c) in coeffs {
            acc = acc.add(&PolyMat::from_qmat(&rep.matrix(&sigma)).scaled(&c, &spec)?);
        }
        Ok(acc)
    };
    let op_lhs = apply_phi(exprs[1].entry_coefficients(upper, lower))?;
    let op_rhs = apply_phi(exprs[3].entry_coefficients(upper, lower))?;

    let block_ok = block_lhs == rhs;
    let op_ok = op_lhs == rhs;
    let consistency_ok = op_rhs == rhs;
    ctx.note(format!(
        "block-matrix reading (row-scaled diag(phi(z'_a)) H): {}",
        if block_ok { "pass" } else { "fail" }
    ));
    ctx.note(format!(
        "operator-extracted reading: {}",
        if op_ok { "pass" } else { "fail" }
    ));
    ctx.note(format!(
        "right side matches coefficient of the normal-ordered product expression: {}",
        if consistency_ok { "pass" } else { "fail" }
    ));
    let counts = TermCounts { lhs: op_lhs.term_count(), rhs: rhs.term_count() };
    let witness = if !op_ok {
        op_lhs.first_diff(&rhs)
    } else if !block_ok {
        block_lhs.first_diff(&rhs)
    } else if !consistency_ok {
        op_rhs.first_diff(&rhs)
    } else {
        None
    };
    let ok = (block_ok || op_ok) && consistency_ok;
    Ok(Box::new(move |ctx: Ctx| {
        if ok {
            ctx.pass(counts)
        } else {
            let (bi, bj, mono, ca, cb) = witness.expect("failing reading has a witness");
            let w = Witness::located(&mono, &ca, &cb, None, &[bi as u8], &[bj as u8]);
            ctx.fail(w, counts)
        }
    }))
}

/// Higher Capelli identity attached to a pair of standard tableaux:
/// `(X_1 Y_1)(X_2 Y_2 - c_T(2) H_2) ... (X_r Y_r - c_T(r) H_r) Psi = X..Y.. Psi`.
/// `content_shift` offsets the contents (mutation control); `psi_scale`
/// rescales `Psi`, which must not change the verdict.
#[allow(clippy::too_many_arguments)]
pub fn check_okounkov(
    d: u8,
    shape: &[u8],
    t: &StandardTableau,
    t_prime: &StandardTableau,
    hmode: HMode,
    content_shift: i64,
    psi_scale: i64,
    bounds: &ResourceBounds,
) -> CheckReport {
    let id = if content_shift == 0 { "okounkov" } else { "mutation-okounkov-content" };
    let mut ctx = Ctx::new(id)
        .param("d", d)
        .param("shape", format_list(shape))
        .param("t", t.to_string())
        .param("t_prime", t_prime.to_string())
        .param("hmode", hmode_name(&hmode))
        .param("psi_scale", psi_scale);
    ctx.note(CENTRAL_H_NOTE);
    if hmode == HMode::Identity {
        ctx.note("H = I: this instance is the higher Capelli identity of Okounkov");
    }
    let r = crate::symgroup::partition_size(shape);
    let dim = (d as usize).pow(r as u32);
    if dim > bounds.max_tensor_dim {
        return ctx.skipped("tensor dimension bound");
    }
    let spec = RelationSpec::capelli(d, d, d, hmode);
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let rep = SeminormalRep::build(shape)?;
        let ti = rep
            .tableau_index(t)
            .ok_or_else(|| crate::error::Error::BadShape("tableau not of given shape".into()))?;
        let tpi = rep
            .tableau_index(t_prime)
            .ok_or_else(|| crate::error::Error::BadShape("tableau not of given shape".into()))?;
        let space = MixedSpace::uniform(d, r);
        let psi = psi_operator(&rep, ti, tpi, &space, &rat(psi_scale))?;

        let mut lhs = psi.clone();
        for k in (1..=r).rev() {
            let mut f = xy_at(&spec, k, lhs.codomain())?;
            let c = if k == 1 { 0 } else { t.content(k as u8) + content_shift };
            if c != 0 {
                let h = crate::verify::build::h_at(&spec, k, lhs.codomain())?;
                f = f.sub(&h.scaled_rat(&rat(c)))?;
            }
            lhs = f.compose(&lhs, &spec)?;
        }

        let mut rhs = psi;
        for k in (1..=r).rev() {
            let y = crate::verify::build::y_at(&spec, k, rhs.codomain())?;
            rhs = y.compose(&rhs, &spec)?;
        }
        for k in (1..=r).rev() {
            let x = crate::verify::build::x_at(&spec, k, rhs.codomain())?;
            rhs = x.compose(&rhs, &spec)?;
        }
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        let witness = lhs.first_diff(&rhs).map(|(out, input, mono, ca, cb)| {
            Witness::located(&mono, &ca, &cb, None, &out, &input)
        });
        Ok((witness, counts))
    })();
    match result {
        Ok((witness, counts)) => ctx.resolve(witness, counts),
        Err(err) => ctx.skipped(err.to_string()),
    }
}

/// The classical Capelli identity in the Weyl algebra model, verified both
/// by normal-form equality and by comparing differential actions computed
/// factorwise (independently of the rewrite engine) on all monomials of
/// degree at most `n`.
pub fn check_classical_capelli(n: u8, zero_shift: bool, bounds: &ResourceBounds) -> CheckReport {
    let id = if zero_shift { "mutation-classical-shift" } else { "classical-capelli" };
    let mut ctx = Ctx::new(id).param("n", n);
    ctx.note(CENTRAL_H_NOTE);
    ctx.note(COLUMN_DET_NOTE);
    if n > 3 {
        return ctx.skipped("classical check supported for n <= 3");
    }
    let spec = RelationSpec::weyl(n);
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let shifted = RingMatrix::from_fn(n as usize, n as usize, |i, k| {
            let mut e = xy_entry(&spec, i, k)?;
            if i == k && !zero_shift {
                e += NCPoly::constant(rat((n - k) as i64));
            }
            Ok(e)
        })?;
        let lhs = column_det(&shifted, &spec)?;
        let det_x = column_det(&x_ring_matrix(&spec)?, &spec)?;
        let det_y = column_det(&y_ring_matrix(&spec)?, &spec)?;
        let rhs = det_x.mul_unchecked(&det_y, &spec)?;
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        if let Some((mono, ca, cb)) = lhs.first_diff(&rhs) {
            return Ok((Some(Witness::scalar(&mono, &ca, &cb)), counts));
        }

        // Differential-action mode. The left action folds the shifted matrix
        // entries column by column (each entry is an un-rewritten degree-2
        // word sum); the right action applies det(Y) then det(X), both
        // single-alphabet polynomials. Neither path normalizes a mixed word.
        let mut basis = vec![XPoly::one()];
        let vars: Vec<(u8, u8)> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        let mut layer = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for mono in &layer {
                let start = mono.last().cloned().unwrap_or((1, 1));
                for &v in vars.iter().filter(|&&v| v >= start) {
                    let mut m2: Vec<(u8, u8)> = mono.clone();
                    m2.push(v);
                    basis.push(XPoly::monomial(&m2, rat(1)));
                    next.push(m2);
                }
            }
            layer = next;
        }

        for f in &basis {
            let mut lhs_action = XPoly::zero();
            for sigma in crate::symgroup::Permutation::all(n as usize) {
                let mut acc = f.clone();
                for t in (1..=n).rev() {
                    let entry = shifted.at(sigma.apply(t) as usize - 1, t as usize - 1);
                    acc = apply_weyl(entry, &acc, &spec)?;
                    if acc.is_zero() {
                        break;
                    }
                }
                lhs_action = lhs_action.add(&acc.scaled(&rat(sigma.sign() as i64)));
            }
            let rhs_action = apply_weyl(&det_x, &apply_weyl(&det_y, f, &spec)?, &spec)?;
            let engine_action = apply_weyl(&lhs, f, &spec)?;
            if lhs_action != rhs_action || engine_action != lhs_action {
                let w = Witness {
                    monomial: format!("action on {f}"),
                    lhs_coeff: lhs_action.to_string(),
                    rhs_coeff: rhs_action.to_string(),
                    location: None,
                };
                return Ok((Some(w), counts));
            }
        }
        Ok((None, counts))
    })();
    let _ = bounds;
    match result {
        Ok((witness, counts)) => ctx.resolve(witness, counts),
        Err(err) => ctx.skipped(err.to_string()),
    }
}

pub fn format_list(xs: &[u8]) -> String {
    format!("[{}]", xs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::normalize;
    use crate::verify::report::Status;

    fn bounds() -> ResourceBounds {
        ResourceBounds::default()
    }

    #[test]
    fn capelli_trivial_rank_one() {
        let r = check_capelli_general(1, 1, 1, 1, HMode::Symbolic, 0, &bounds());
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn capelli_rank_two_symbolic() {
        let r = check_capelli_general(2, 2, 2, 2, HMode::Symbolic, 0, &bounds());
        assert_eq!(r.status, Status::Pass, "witness: {:?}", r.witness);
    }

    #[test]
    fn capelli_mutation_fails_with_witness() {
        let r = check_capelli_general(2, 2, 2, 2, HMode::Symbolic, 1, &bounds());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn williamson_rank_one_trivial() {
        let r = check_williamson(
            2,
            2,
            2,
            &[1],
            &[2],
            &[1],
            HMode::Symbolic,
            false,
            &bounds(),
        );
        assert_eq!(r.status, Status::Pass, "{:?}", r);
    }

    #[test]
    fn williamson_frozen_rank_two_scalar_case() {
        // n = m = s = 1, r = 2, trivial shape: left side normal-orders to
        // 2 X^2 Y^2 and the right side is (1/2)(2X^2)(2Y^2).
        let spec = RelationSpec::capelli(1, 1, 1, HMode::Symbolic);
        let r = check_williamson(
            1,
            1,
            1,
            &[2],
            &[1, 1],
            &[1, 1],
            HMode::Symbolic,
            false,
            &bounds(),
        );
        assert_eq!(r.status, Status::Pass, "{:?}", r);
        // Frozen value of the left side.
        let x = spec.x_poly(1, 1).unwrap();
        let y = spec.y_poly(1, 1).unwrap();
        let xy = x.mul_unchecked(&y, &spec).unwrap();
        let h = NCPoly::from_symbol(crate::exactalg::Symbol::h(1, 1));
        let lhs = (xy.clone() - h)
            .mul_unchecked(&xy, &spec)
            .unwrap()
            + xy.mul_unchecked(&xy, &spec).unwrap()
            - xy.mul_unchecked(&NCPoly::from_symbol(crate::exactalg::Symbol::h(1, 1)), &spec)
                .unwrap();
        let expect = normalize(
            &[
                crate::exactalg::Symbol::x(1, 1),
                crate::exactalg::Symbol::x(1, 1),
                crate::exactalg::Symbol::y(1, 1),
                crate::exactalg::Symbol::y(1, 1),
            ],
            rat(2),
            &spec,
        )
        .unwrap();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn okounkov_small_shapes() {
        let ts = crate::symgroup::standard_tableaux(&[1, 1]).unwrap();
        let r = check_okounkov(2, &[1, 1], &ts[0], &ts[0], HMode::Symbolic, 0, 1, &bounds());
        assert_eq!(r.status, Status::Pass, "{:?}", r);
        let r = check_okounkov(2, &[1, 1], &ts[0], &ts[0], HMode::Identity, 0, 7, &bounds());
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn classical_capelli_small() {
        for n in 1..=2u8 {
            let r = check_classical_capelli(n, false, &bounds());
            assert_eq!(r.status, Status::Pass, "n={n}: {:?}", r.witness);
        }
        let r = check_classical_capelli(2, true, &bounds());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }
}
