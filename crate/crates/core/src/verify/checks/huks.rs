use crate::error::Result;
use crate::exactalg::{rat, RelationSpec, Side};
use crate::matfun::{column_det, RingMatrix};
use crate::verify::build::{x_ring_matrix, xy_entry, y_ring_matrix};
use crate::verify::report::{
    CheckReport, Ctx, ResourceBounds, TermCounts, Witness, CENTRAL_H_NOTE, COLUMN_DET_NOTE,
};

/// Diagonal shifts of the even identity: `(n-2, n-3, ..., 0, -1)`.
pub fn even_shifts(n: u8) -> Vec<i64> {
    (1..=n as i64).map(|k| n as i64 - 1 - k).collect()
}

/// Diagonal shifts of the odd identity: `(n-1, n-2, ..., 1, 0)`.
pub fn odd_shifts(n: u8) -> Vec<i64> {
    (1..=n as i64).map(|k| n as i64 - k).collect()
}

/// Howe-Umeda-Kostant-Sahi determinant identity:
/// `det(XY + h diag(shifts)) = det(X) det(Y)` over the HUKS relation algebra.
/// In the odd case both sides must additionally be the literal zero
/// polynomial. `shifts_override` replaces the diagonal (mutation control).
pub fn check_huks(
    even: bool,
    n: u8,
    antisym: Side,
    shifts_override: Option<Vec<i64>>,
    bounds: &ResourceBounds,
) -> CheckReport {
    let id = match (even, &shifts_override) {
        (true, None) => "huks-even",
        (false, None) => "huks-odd",
        _ => "mutation-huks-shift",
    };
    let mut ctx = Ctx::new(id).param("n", n).param(
        "antisym",
        match antisym {
            Side::X => "X",
            Side::Y => "Y",
        },
    );
    ctx.note(CENTRAL_H_NOTE);
    ctx.note(COLUMN_DET_NOTE);
    if even && n % 2 != 0 {
        return ctx.skipped(format!("even flavor requires even n, got {n}"));
    }
    if !even && n % 2 == 0 {
        return ctx.skipped(format!("odd flavor requires odd n, got {n}"));
    }
    if let Some(s) = &shifts_override {
        ctx = ctx.param("shifts", format!("{s:?}"));
    }
    let factorial: usize = (1..=n as usize).product();
    if factorial * factorial > bounds.max_terms_per_side * 16 {
        return ctx.skipped("determinant expansion bound");
    }
    let spec = RelationSpec::huks(n, antisym);
    let shifts = shifts_override.unwrap_or_else(|| if even { even_shifts(n) } else { odd_shifts(n) });
    let result = (|| -> Result<(Option<Witness>, TermCounts)> {
        let h = spec.h_scalar_value();
        let shifted = RingMatrix::from_fn(n as usize, n as usize, |i, k| {
            let mut e = xy_entry(&spec, i, k)?;
            let d = shifts[k as usize - 1];
            if i == k && d != 0 {
                e += h.scaled(&rat(d));
            }
            Ok(e)
        })?;
        let lhs = column_det(&shifted, &spec)?;
        let det_x = column_det(&x_ring_matrix(&spec)?, &spec)?;
        let det_y = column_det(&y_ring_matrix(&spec)?, &spec)?;
        let rhs = det_x.mul_unchecked(&det_y, &spec)?;
        let counts = TermCounts { lhs: lhs.term_count(), rhs: rhs.term_count() };
        if !even {
            // The antisymmetric odd factor has vanishing determinant, so
            // both sides must be literally zero.
            if !rhs.is_zero() {
                let (mono, c) = rhs.terms().next().expect("nonzero");
                return Ok((Some(Witness::scalar(mono, &rat(0), c)), counts));
            }
            if !lhs.is_zero() {
                let (mono, c) = lhs.terms().next().expect("nonzero");
                return Ok((Some(Witness::scalar(mono, c, &rat(0))), counts));
            }
        }
        Ok((lhs.first_diff(&rhs).map(|(m, a, b)| Witness::scalar(&m, &a, &b)), counts))
    })();
    match result {
        Ok((witness, counts)) => ctx.resolve(witness, counts),
        Err(err) => ctx.skipped(err.to_string()),
    }
}
