use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactalg::{
    apply_weyl, apply_word_weyl, multiply, normalize, rat, GenKind, HMode, Monomial, NCPoly,
    RelationSpec, Side, Symbol, XPoly,
};
use crate::matfun::{column_det, increasing_subsets, permanent_rowperm};
use crate::symgroup::{character, partitions, Permutation, SeminormalRep};
use crate::tensorop::{symmetrizer, MixedSpace, SymKind};
use crate::verify::build::{
    turnbull_sides, x_at, x_ring_matrix, xy_entry, TurnbullKind,
};
use crate::verify::report::{CheckReport, Ctx, ResourceBounds, TermCounts, Witness};

fn all_families() -> Vec<(&'static str, RelationSpec)> {
    vec![
        ("capelli", RelationSpec::capelli(2, 2, 2, HMode::Symbolic)),
        ("capelli-rect", RelationSpec::capelli(3, 2, 3, HMode::Symbolic)),
        ("turnbull-sym", RelationSpec::turnbull_sym(3, 2, HMode::Symbolic)),
        ("turnbull-anti", RelationSpec::turnbull_anti(3, 2, HMode::Symbolic)),
        ("huks-y", RelationSpec::huks(3, Side::Y)),
        ("huks-x", RelationSpec::huks(3, Side::X)),
        ("weyl", RelationSpec::weyl(2)),
    ]
}

fn family_spec(name: &str) -> Option<RelationSpec> {
    all_families().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

fn random_symbol(rng: &mut ChaCha8Rng, spec: &RelationSpec) -> Symbol {
    let kinds: Vec<GenKind> = {
        let mut ks = vec![GenKind::X, GenKind::Y];
        match spec.family {
            crate::exactalg::Family::Huks { .. } => ks.push(GenKind::HScalar),
            _ => {
                if spec.hmode == HMode::Symbolic {
                    ks.push(GenKind::H);
                } else if spec.hmode == HMode::ScalarH {
                    ks.push(GenKind::HScalar);
                }
            }
        }
        ks
    };
    let kind = kinds[rng.gen_range(0..kinds.len())];
    let (rows, cols) = match kind {
        GenKind::X => spec.x_dims(),
        GenKind::Y => spec.y_dims(),
        GenKind::H => spec.h_dims(),
        GenKind::HScalar => return Symbol::h_scalar(),
    };
    Symbol {
        kind,
        row: rng.gen_range(1..=rows),
        col: rng.gen_range(1..=cols),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, spec: &RelationSpec, max_deg: usize, terms: usize) -> NCPoly {
    let mut acc = NCPoly::zero();
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let word: Vec<Symbol> = (0..deg).map(|_| random_symbol(rng, spec)).collect();
        let coeff = rat(rng.gen_range(-4..=4i64));
        if let Ok(p) = normalize(&word, coeff, spec) {
            acc += p;
        }
    }
    acc
}

/// Seeded associativity fuzz over one relation family.
pub fn check_assoc_fuzz(family: &str, seed: u64, count: usize) -> CheckReport {
    let mut ctx = Ctx::new("engine-assoc")
        .param("family", family)
        .param("seed", seed)
        .param("count", count);
    let Some(spec) = family_spec(family) else {
        return ctx.skipped(format!("unknown family {family}"));
    };
    ctx.note(format!("relation algebra {spec}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..count {
        let p = random_poly(&mut rng, &spec, 3, 3);
        let q = random_poly(&mut rng, &spec, 3, 3);
        let r = random_poly(&mut rng, &spec, 3, 3);
        let left = p
            .mul_unchecked(&q, &spec)
            .and_then(|pq| pq.mul_unchecked(&r, &spec));
        let right = q
            .mul_unchecked(&r, &spec)
            .and_then(|qr| p.mul_unchecked(&qr, &spec));
        match (left, right) {
            (Ok(a), Ok(b)) => {
                if let Some((m, ca, cb)) = a.first_diff(&b) {
                    let mut ctx = ctx;
                    ctx.note(format!("trial {trial}"));
                    return ctx.fail(
                        Witness::scalar(&m, &ca, &cb),
                        TermCounts { lhs: a.term_count(), rhs: b.term_count() },
                    );
                }
            }
            _ => return ctx.skipped("random product failed to evaluate"),
        }
    }
    ctx.pass(TermCounts::default())
}

/// Canonical-form idempotence: re-normalizing the word of a normal-form
/// monomial reproduces exactly that monomial. Exhaustive at low degree,
/// seeded random at degrees 4 to 6.
pub fn check_idempotence(seed: u64) -> CheckReport {
    let mut ctx = Ctx::new("engine-idempotence").param("seed", seed);
    for (name, spec) in all_families() {
        // Exhaustive words of length <= 3 over all generators.
        let mut gens: Vec<Symbol> = Vec::new();
        let (xr, xc) = spec.x_dims();
        let (yr, yc) = spec.y_dims();
        for i in 1..=xr {
            for j in 1..=xc {
                gens.push(Symbol::x(i, j));
            }
        }
        for i in 1..=yr {
            for j in 1..=yc {
                gens.push(Symbol::y(i, j));
            }
        }
        match spec.family {
            crate::exactalg::Family::Huks { .. } => gens.push(Symbol::h_scalar()),
            _ => {
                let (hr, hc) = spec.h_dims();
                if spec.hmode == HMode::Symbolic {
                    for i in 1..=hr {
                        for j in 1..=hc {
                            gens.push(Symbol::h(i, j));
                        }
                    }
                }
            }
        }
        let mut words: Vec<Vec<Symbol>> = vec![Vec::new()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for w in &words {
                for &g in &gens {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            words.extend(next.clone());
            words = words.into_iter().filter(|w| !w.is_empty()).collect();
            let mut seen = std::collections::BTreeSet::new();
            words.retain(|w| seen.insert(w.clone()));
            if words.len() > 40_000 {
                break;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random_words = Vec::new();
        for _ in 0..150 {
            let deg = rng.gen_range(4..=6);
            let word: Vec<Symbol> = (0..deg).map(|_| random_symbol(&mut rng, &spec)).collect();
            random_words.push(word);
        }
        for word in words.iter().chain(random_words.iter()) {
            let p = match normalize(word, rat(1), &spec) {
                Ok(p) => p,
                Err(_) => continue,
            };
            for (mono, _) in p.terms() {
                let again = match normalize(&mono.word(), rat(1), &spec) {
                    Ok(q) => q,
                    Err(e) => {
                        return ctx.skipped(format!("renormalization error: {e}"));
                    }
                };
                let mut expect = NCPoly::zero();
                expect.add_term(mono.clone(), rat(1));
                if again != expect {
                    ctx.note(format!("family {name}"));
                    let (m, a, b) = again.first_diff(&expect).expect("differs");
                    return ctx.fail(Witness::scalar(&m, &a, &b), TermCounts::default());
                }
            }
        }
    }
    ctx.pass(TermCounts::default())
}

/// Symmetry compatibility of the antisymmetric families: diagonal
/// generators vanish and transposed representatives differ by a sign.
pub fn check_symmetry_compat() -> CheckReport {
    let mut ctx = Ctx::new("engine-symmetry");
    let cases = [
        RelationSpec::turnbull_anti(3, 2, HMode::Symbolic),
        RelationSpec::huks(3, Side::X),
    ];
    for spec in cases {
        for i in 1..=3u8 {
            let w = [Symbol::x(i, i), Symbol::y(1, 1)];
            match normalize(&w, rat(1), &spec) {
                Ok(p) if p.is_zero() => {}
                Ok(p) => {
                    let (m, c) = p.terms().next().expect("nonzero");
                    ctx.note(format!("diagonal X[{i},{i}] should vanish in {spec}"));
                    return ctx.fail(Witness::scalar(m, c, &rat(0)), TermCounts::default());
                }
                Err(e) => return ctx.skipped(e.to_string()),
            }
        }
        for i in 1..=3u8 {
            for j in i + 1..=3u8 {
                let flip = normalize(&[Symbol::x(j, i), Symbol::y(1, 1)], rat(1), &spec);
                let base = normalize(&[Symbol::x(i, j), Symbol::y(1, 1)], rat(-1), &spec);
                match (flip, base) {
                    (Ok(a), Ok(b)) => {
                        if let Some((m, ca, cb)) = a.first_diff(&b) {
                            return ctx.fail(Witness::scalar(&m, &ca, &cb), TermCounts::default());
                        }
                    }
                    _ => return ctx.skipped("normalization failed"),
                }
            }
        }
    }
    // Symmetric family: transposed representative is equal.
    let spec = RelationSpec::turnbull_sym(3, 2, HMode::Symbolic);
    for i in 1..=3u8 {
        for j in i..=3u8 {
            let a = normalize(&[Symbol::x(j, i)], rat(1), &spec).unwrap();
            let b = normalize(&[Symbol::x(i, j)], rat(1), &spec).unwrap();
            if let Some((m, ca, cb)) = a.first_diff(&b) {
                return ctx.fail(Witness::scalar(&m, &ca, &cb), TermCounts::default());
            }
        }
    }
    ctx.pass(TermCounts::default())
}

/// Derived commutation `[X[i,j], H[k,t]] = 0`, exact in the central model,
/// reproduced through the multiplication routine.
pub fn check_xh_commute() -> CheckReport {
    let ctx = Ctx::new("engine-xh-commute");
    let spec = RelationSpec::capelli(2, 2, 2, HMode::Symbolic);
    for i in 1..=2u8 {
        for j in 1..=2u8 {
            for k in 1..=2u8 {
                for t in 1..=2u8 {
                    let x = NCPoly::from_symbol(Symbol::x(i, j));
                    let h = NCPoly::from_symbol(Symbol::h(k, t));
                    let xh = multiply(&x, &h, &spec).expect("in bounds");
                    let hx = multiply(&h, &x, &spec).expect("in bounds");
                    if let Some((m, ca, cb)) = xh.first_diff(&hx) {
                        return ctx.fail(Witness::scalar(&m, &ca, &cb), TermCounts::default());
                    }
                }
            }
        }
    }
    ctx.pass(TermCounts::default())
}

fn random_xpoly(rng: &mut ChaCha8Rng, n: u8, max_deg: usize, terms: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let vars: Vec<(u8, u8)> = (0..deg)
            .map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n)))
            .collect();
        acc = acc.add(&XPoly::monomial(&vars, rat(rng.gen_range(-3..=3i64))));
    }
    acc
}

/// Action-oracle consistency over the Weyl algebra: the differential action
/// of a normalized word agrees with the factorwise action of the raw word.
pub fn check_action_oracle(n: u8, seed: u64, count: usize) -> CheckReport {
    let mut ctx = Ctx::new("engine-action-oracle")
        .param("n", n)
        .param("seed", seed)
        .param("count", count);
    if n > 2 {
        return ctx.skipped("action oracle exercised for n <= 2");
    }
    let spec = RelationSpec::weyl(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..count {
        let deg = rng.gen_range(1..=5);
        let word: Vec<Symbol> = (0..deg)
            .map(|_| {
                let x = rng.gen_bool(0.5);
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                if x {
                    Symbol::x(i, j)
                } else {
                    Symbol::y(i, j)
                }
            })
            .collect();
        let f = random_xpoly(&mut rng, n, 3, 3);
        let normalized = match normalize(&word, rat(1), &spec) {
            Ok(p) => p,
            Err(e) => return ctx.skipped(e.to_string()),
        };
        let via_engine = match apply_weyl(&normalized, &f, &spec) {
            Ok(g) => g,
            Err(e) => return ctx.skipped(e.to_string()),
        };
        let via_word = apply_word_weyl(&word, &f).expect("X/Y word");
        if via_engine != via_word {
            ctx.note(format!("trial {trial}: word action disagrees"));
            let w = Witness {
                monomial: format!(
                    "word {} on {f}",
                    word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("*")
                ),
                lhs_coeff: via_engine.to_string(),
                rhs_coeff: via_word.to_string(),
                location: None,
            };
            return ctx.fail(w, TermCounts::default());
        }
    }
    ctx.pass(TermCounts::default())
}

/// Cross-oracle agreements: column determinant against the antisymmetrizer
/// coefficient, permanent against the symmetrizer coefficient, character
/// against the seminormal trace, and the scalar/operator coupling of the
/// Turnbull identity.
pub fn check_cross_oracles(bounds: &ResourceBounds) -> CheckReport {
    let mut ctx = Ctx::new("engine-cross-oracle");
    let _ = bounds;
    let result = (|| -> Result<Option<Witness>> {
        // Coefficient of A_r X_1 .. X_r at (I, K) is det(X_IK) / r!.
        for r in 1..=3usize {
            let spec = RelationSpec::capelli(3, 3, 3, HMode::Symbolic);
            let space = MixedSpace::uniform(3, r);
            let positions: Vec<usize> = (1..=r).collect();
            let x = x_ring_matrix(&spec)?;
            type Functional = fn(
                &crate::matfun::RingMatrix,
                &RelationSpec,
            ) -> Result<NCPoly>;
            let table: [(SymKind, Functional); 2] = [
                (SymKind::Antisymmetrizer, column_det),
                (SymKind::Symmetrizer, permanent_rowperm),
            ];
            for (kind, functional) in table {
                let proj = symmetrizer(kind, &positions, &space)?;
                let mut op = proj;
                for k in (1..=r).rev() {
                    let xk = x_at(&spec, k, &space)?;
                    op = op.compose(&xk, &spec)?;
                }
                let rfact = rat((1..=r as i64).product());
                for upper in increasing_subsets(3, r) {
                    for lower in increasing_subsets(3, r) {
                        let coeff = op.coefficient(&upper, &lower).scaled(&rfact);
                        let direct = functional(&x.submatrix(&upper, &lower), &spec)?;
                        if let Some((m, a, b)) = coeff.first_diff(&direct) {
                            ctx.note(format!(
                                "projector coefficient vs functional at I={upper:?}, K={lower:?}"
                            ));
                            return Ok(Some(Witness::scalar(&m, &a, &b)));
                        }
                    }
                }
            }
        }

        // Character equals seminormal trace for all shapes of size <= 4.
        for r in 1..=4usize {
            for shape in partitions(r) {
                let rep = SeminormalRep::build(&shape)?;
                for sigma in Permutation::all(r) {
                    let chi = character(&shape, &sigma)?;
                    let tr = rep.matrix(&sigma).trace();
                    if chi != tr {
                        return Ok(Some(Witness::scalar(
                            &Monomial::unit(),
                            &chi,
                            &tr,
                        )));
                    }
                }
            }
        }

        // Scalar Turnbull identity at a subset pair holds exactly when the
        // corresponding operator coefficient of the two sides agree:
        // coefficient times r! reproduces each scalar side at n = m = r = 2.
        let spec = RelationSpec::turnbull_sym(2, 2, HMode::Symbolic);
        let (lhs_op, rhs_op) = turnbull_sides(&spec, TurnbullKind::SymDet, 2, 1)?;
        let h = crate::verify::build::h_ring_matrix(&spec)?;
        let upper = vec![1u8, 2];
        let lower = vec![1u8, 2];
        let shifted = crate::verify::build::matrix_from_indices(
            &upper,
            &lower,
            |i, k, _, t| {
                let mut e = xy_entry(&spec, i, k)?;
                let shift = (2 - 1 - t) as i64;
                if shift != 0 {
                    e += h.at(i as usize - 1, k as usize - 1).scaled(&rat(shift));
                }
                Ok(e)
            },
        )?;
        let scalar_lhs = column_det(&shifted, &spec)?;
        let mut scalar_rhs = NCPoly::zero();
        let x = x_ring_matrix(&spec)?;
        let y = crate::verify::build::y_ring_matrix(&spec)?;
        for j in increasing_subsets(2, 2) {
            let dx = column_det(&x.submatrix(&upper, &j), &spec)?;
            let dy = column_det(&y.submatrix(&j, &lower), &spec)?;
            scalar_rhs += dx.mul_unchecked(&dy, &spec)?;
        }
        let two = rat(2);
        let op_lhs_scaled = lhs_op.coefficient(&upper, &lower).scaled(&two);
        let op_rhs_scaled = rhs_op.coefficient(&upper, &lower).scaled(&two);
        if let Some((m, a, b)) = op_lhs_scaled.first_diff(&scalar_lhs) {
            ctx.note("operator coefficient does not reproduce the shifted determinant");
            return Ok(Some(Witness::scalar(&m, &a, &b)));
        }
        if let Some((m, a, b)) = op_rhs_scaled.first_diff(&scalar_rhs) {
            ctx.note("operator coefficient does not reproduce the determinant sum");
            return Ok(Some(Witness::scalar(&m, &a, &b)));
        }
        Ok(None)
    })();
    match result {
        Ok(w) => ctx.resolve(w, TermCounts::default()),
        Err(e) => ctx.skipped(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::Status;

    #[test]
    fn associativity_all_families() {
        for (name, _) in all_families() {
            let r = check_assoc_fuzz(name, 7, 120);
            assert_eq!(r.status, Status::Pass, "family {name}: {:?}", r.witness);
        }
    }

    #[test]
    fn idempotence() {
        let r = check_idempotence(11);
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn symmetry_and_xh() {
        assert_eq!(check_symmetry_compat().status, Status::Pass);
        assert_eq!(check_xh_commute().status, Status::Pass);
    }

    #[test]
    fn action_oracle() {
        for n in 1..=2u8 {
            let r = check_action_oracle(n, 3, 120);
            assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
        }
    }

    #[test]
    fn cross_oracles() {
        let r = check_cross_oracles(&ResourceBounds::default());
        assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }
}
