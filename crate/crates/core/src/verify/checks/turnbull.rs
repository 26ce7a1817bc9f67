use crate::error::Result;
use crate::exactalg::{rat, HMode, NCPoly, Rational, RelationSpec};
use crate::matfun::{
    column_det, increasing_subsets, nondecreasing_sequences, permanent_rowperm, v_multiplicity,
};
use crate::verify::build::{
    h_ring_matrix, matrix_from_indices, turnbull_sides, x_ring_matrix, xy_entry, y_ring_matrix,
    TurnbullKind,
};
use crate::verify::checks::capelli::hmode_name;
use crate::verify::report::{
    CheckReport, Ctx, ResourceBounds, TermCounts, Witness, CENTRAL_H_NOTE, COLUMN_DET_NOTE,
};

/// Turnbull identity, symmetric (determinant) or antisymmetric (permanent)
/// flavor: the operator identity, then the scalar identity over all strict
/// row/column subsets. `shift_sign = -1` is the mutation control flipping
/// the diagonal `H` shifts.
pub fn check_turnbull(
    kind: TurnbullKind,
    n: u8,
    m: u8,
    r: usize,
    hmode: HMode,
    shift_sign: i64,
    bounds: &ResourceBounds,
) -> CheckReport {
    let id = match (kind, shift_sign) {
        (TurnbullKind::SymDet, 1) => "turnbull-sym",
        (TurnbullKind::AntiPer, 1) => "turnbull-anti",
        _ => "mutation-turnbull-shift",
    };
    let mut ctx = Ctx::new(id)
        .param("n", n)
        .param("m", m)
        .param("r", r)
        .param("hmode", hmode_name(&hmode));
    ctx.note(CENTRAL_H_NOTE);
    ctx.note(COLUMN_DET_NOTE);
    match hmode {
        HMode::Identity => ctx.note("H = I: Turnbull's classical specialization"),
        HMode::ScalarH => ctx.note("H = hI: the scalar-parameter specialization"),
        _ => {}
    }
    if kind == TurnbullKind::SymDet && r > n as usize {
        return ctx.skipped(format!("symmetric flavor needs r <= n, got r={r}, n={n}"));
    }
    let dim = (n.max(m) as usize).pow(r as u32);
    if dim > bounds.max_tensor_dim {
        return ctx.skipped("tensor dimension bound");
    }
    let spec = match kind {
        TurnbullKind::SymDet => RelationSpec::turnbull_sym(n, m, hmode),
        TurnbullKind::AntiPer => RelationSpec::turnbull_anti(n, m, hmode),
    };
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        // Operator identity.
        let (lhs, rhs) = turnbull_sides(&spec, kind, r, shift_sign)?;
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        if let Some((out, input, mono, ca, cb)) = lhs.first_diff(&rhs) {
            return Ok((
                Some(Witness::located(&mono, &ca, &cb, None, &out, &input)),
                counts,
            ));
        }

        // Scalar identity over strict subsets I of [n], L of [m].
        let x = x_ring_matrix(&spec)?;
        let y = y_ring_matrix(&spec)?;
        let h = h_ring_matrix(&spec)?;
        for upper in increasing_subsets(n, r) {
            for lower in increasing_subsets(m, r) {
                let shifted = matrix_from_indices(&upper, &lower, |i, k, _, t| {
                    let mut e = xy_entry(&spec, i, k)?;
                    let shift = (r - 1 - t) as i64 * shift_sign;
                    if shift != 0 {
                        e += h
                            .at(i as usize - 1, k as usize - 1)
                            .scaled(&rat(shift));
                    }
                    Ok(e)
                })?;
                let (scalar_lhs, scalar_rhs) = match kind {
                    TurnbullKind::SymDet => {
                        let lhs = column_det(&shifted, &spec)?;
                        let mut rhs = NCPoly::zero();
                        for j in increasing_subsets(n, r) {
                            let dx = column_det(&x.submatrix(&upper, &j), &spec)?;
                            let dy = column_det(&y.submatrix(&j, &lower), &spec)?;
                            rhs += dx.mul_unchecked(&dy, &spec)?;
                        }
                        (lhs, rhs)
                    }
                    TurnbullKind::AntiPer => {
                        let lhs = permanent_rowperm(&shifted, &spec)?;
                        let mut rhs = NCPoly::zero();
                        for j in nondecreasing_sequences(n, r) {
                            let px = permanent_rowperm(&x.submatrix(&upper, &j), &spec)?;
                            let py = permanent_rowperm(&y.submatrix(&j, &lower), &spec)?;
                            let v = v_multiplicity(&j)?;
                            rhs += px
                                .mul_unchecked(&py, &spec)?
                                .scaled(&(Rational::from_integer(1.into()) / v));
                        }
                        (lhs, rhs)
                    }
                };
                if let Some((mono, ca, cb)) = scalar_lhs.first_diff(&scalar_rhs) {
                    let w = Witness {
                        monomial: mono.to_string(),
                        lhs_coeff: ca.to_string(),
                        rhs_coeff: cb.to_string(),
                        location: Some(crate::verify::report::WitnessLocation {
                            sigma: None,
                            out_index: upper.clone(),
                            in_index: lower.clone(),
                        }),
                    };
                    return Ok((Some(w), counts));
                }
            }
        }
        Ok((None, counts))
    })();
    match result {
        Ok((witness, counts)) => ctx.resolve(witness, counts),
        Err(err) => ctx.skipped(err.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::Status;

    #[test]
    fn rank_one_is_trivial() {
        let r = check_turnbull(
            TurnbullKind::SymDet,
            2,
            2,
            1,
            HMode::Symbolic,
            1,
            &ResourceBounds::default(),
        );
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn symmetric_two_two() {
        let r = check_turnbull(
            TurnbullKind::SymDet,
            2,
            2,
            2,
            HMode::Symbolic,
            1,
            &ResourceBounds::default(),
        );
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn antisymmetric_three_two_scalar_h() {
        let r = check_turnbull(
            TurnbullKind::AntiPer,
            3,
            2,
            2,
            HMode::ScalarH,
            1,
            &ResourceBounds::default(),
        );
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn mutation_fails() {
        let r = check_turnbull(
            TurnbullKind::SymDet,
            2,
            2,
            2,
            HMode::Symbolic,
            -1,
            &ResourceBounds::default(),
        );
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }
}
