//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All comparisons are equality of canonical forms over exact rationals;
//! time limits are asserted where stated.

use std::time::Instant;

use capelli_core::exactalg::{HMode, Side};
use capelli_core::symgroup::{partitions, standard_tableaux};
use capelli_core::verify::build::TurnbullKind;
use capelli_core::verify::checks::{
    check_action_oracle, check_assoc_fuzz, check_capelli_general, check_classical_capelli,
    check_cross_oracles, check_huks, check_huks_expansion, check_huks_phi_psi, check_idempotence,
    check_odd_anti, check_odd_expansion, check_okounkov, check_pf_alternating,
    check_pf_congruence, check_pf_corollary, check_pf_definitions, check_pf_fg_action,
    check_pf_laplace, check_pf_minor_sum3, check_pf_minor_sum6, check_pf_permutation,
    check_axq_sxq, check_claim_lemma, check_turnbull, check_williamson,
};
use capelli_core::verify::{
    run_check, run_suite, CheckReport, ResourceBounds, Status, SuiteConfig,
};

fn bounds() -> ResourceBounds {
    ResourceBounds::default()
}

fn assert_pass(report: &CheckReport, label: &str) {
    assert_eq!(
        report.status,
        Status::Pass,
        "{label}: expected pass, got {:?} with witness {:?} (notes {:?})",
        report.status,
        report.witness,
        report.model_notes
    );
}

fn line(criterion: u32, name: &str, ok: bool) {
    println!(
        "ACCEPTANCE {criterion} ({name}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {criterion} ({name}) failed");
}

#[test]
fn criterion_01_classical_capelli() {
    for n in 1..=3u8 {
        let t0 = Instant::now();
        let r = check_classical_capelli(n, false, &bounds());
        assert_pass(&r, &format!("classical n={n}"));
        if n == 3 {
            assert!(t0.elapsed().as_secs() < 120, "n=3 must finish under 120 s");
        }
    }
    line(1, "classical Capelli identity", true);
}

#[test]
fn criterion_02_capelli_operator_identity() {
    let hmodes = [HMode::Symbolic, HMode::Identity, HMode::ScalarH];
    let mut grid: Vec<(u8, u8, u8, usize)> = Vec::new();
    for n in 1..=2u8 {
        for m in 1..=2u8 {
            for s in 1..=2u8 {
                for r in 1..=3usize {
                    grid.push((n, m, s, r));
                }
            }
        }
    }
    grid.push((3, 2, 2, 2));
    grid.push((2, 3, 2, 2));
    for (n, m, s, r) in grid {
        for hmode in &hmodes {
            let report = check_capelli_general(n, m, s, r, hmode.clone(), 0, &bounds());
            assert_pass(&report, &format!("capelli ({n},{m},{s}) r={r} {hmode:?}"));
            assert!(
                report.elapsed_ms < 60_000,
                "instance ({n},{m},{s},{r}) exceeded 60 s"
            );
        }
    }
    line(2, "Capelli operator identity grid", true);
}

#[test]
fn criterion_03_williamson_all_indices() {
    fn tuples(n: u8, r: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..=n).map(move |v| {
                        let mut t2 = t.clone();
                        t2.push(v);
                        t2
                    })
                })
                .collect();
        }
        out
    }
    for r in 1..=3usize {
        for shape in partitions(r) {
            for upper in tuples(2, r) {
                for lower in tuples(2, r) {
                    let report = check_williamson(
                        2,
                        2,
                        2,
                        &shape,
                        &upper,
                        &lower,
                        HMode::Symbolic,
                        false,
                        &bounds(),
                    );
                    assert_pass(
                        &report,
                        &format!("williamson {shape:?} I={upper:?} K={lower:?}"),
                    );
                    // Both readings must be recorded.
                    assert!(report
                        .model_notes
                        .iter()
                        .any(|n| n.starts_with("block-matrix reading")));
                    assert!(report
                        .model_notes
                        .iter()
                        .any(|n| n.starts_with("operator-extracted reading")));
                }
            }
        }
    }
    line(3, "Schur-matrix-function identity, all index tuples", true);
}

#[test]
fn criterion_04_okounkov_all_tableau_pairs() {
    for r in 1..=3usize {
        for shape in partitions(r) {
            let ts = standard_tableaux(&shape).unwrap();
            for t in &ts {
                for tp in &ts {
                    for hmode in [HMode::Symbolic, HMode::Identity] {
                        let report =
                            check_okounkov(2, &shape, t, tp, hmode.clone(), 0, 1, &bounds());
                        assert_pass(&report, &format!("okounkov {shape:?} {t} {tp} {hmode:?}"));
                    }
                }
            }
        }
    }
    // Rescaling the pairing operator must not change the verdict.
    let ts = standard_tableaux(&[2, 1]).unwrap();
    let report = check_okounkov(2, &[2, 1], &ts[0], &ts[1], HMode::Symbolic, 0, 7, &bounds());
    assert_pass(&report, "okounkov scaled");
    line(4, "higher Capelli identities for tableau pairs", true);
}

#[test]
fn criterion_05_turnbull_grid() {
    for kind in [TurnbullKind::SymDet, TurnbullKind::AntiPer] {
        for n in 2..=4u8 {
            for m in 1..=3u8 {
                for r in 1..=(n as usize).min(3) {
                    for hmode in [HMode::Symbolic, HMode::ScalarH, HMode::Identity] {
                        let report =
                            check_turnbull(kind, n, m, r, hmode.clone(), 1, &bounds());
                        assert_pass(
                            &report,
                            &format!("turnbull {kind:?} n={n} m={m} r={r} {hmode:?}"),
                        );
                    }
                }
            }
        }
    }
    line(5, "Turnbull identities, both flavors and specializations", true);
}

#[test]
fn criterion_06_huks_identities() {
    for n in [2u8, 4] {
        let t0 = Instant::now();
        let report = check_huks(true, n, Side::Y, None, &bounds());
        assert_pass(&report, &format!("huks even n={n}"));
        if n == 4 {
            assert!(t0.elapsed().as_secs() < 600, "n=4 must finish under 10 min");
        }
    }
    for n in [1u8, 3] {
        for side in [Side::X, Side::Y] {
            let report = check_huks(false, n, side, None, &bounds());
            assert_pass(&report, &format!("huks odd n={n} {side:?}"));
        }
    }
    line(6, "Howe-Umeda-Kostant-Sahi identities", true);
}

#[test]
fn criterion_07_pfaffian_suite() {
    for (m, n) in [(2u8, 2u8), (4, 2), (2, 4), (3, 3), (3, 1), (1, 3)] {
        assert_pass(&check_pf_laplace(m, n, &bounds()), &format!("laplace ({m},{n})"));
    }
    for (m, n) in [(4u8, 2u8), (3, 3), (2, 4)] {
        assert_pass(&check_pf_corollary(m, n, &bounds()), &format!("corollary ({m},{n})"));
    }
    assert_pass(&check_pf_congruence(4, &bounds()), "congruence");
    assert_pass(&check_pf_permutation(4, &bounds()), "permutation signs");
    for a in 1..=4u8 {
        for b in a + 1..=4u8 {
            assert_pass(
                &check_pf_alternating(4, &[a, b], &bounds()),
                &format!("alternating I=[{a},{b}]"),
            );
        }
    }
    for p in [0usize, 1] {
        assert_pass(&check_pf_minor_sum3(4, p, &bounds()), &format!("minor-sum exchange p={p}"));
        assert_pass(&check_pf_minor_sum6(4, p, &bounds()), &format!("minor-sum vanishing p={p}"));
    }
    for n in [2u8, 4] {
        assert_pass(&check_pf_fg_action(2, n, &bounds()), &format!("pairing action n={n}"));
    }
    for n in [4u8, 6] {
        assert_pass(&check_pf_definitions(n, false, &bounds()), &format!("definitions n={n}"));
    }
    line(7, "Pfaffian identity suite", true);
}

#[test]
fn criterion_08_operator_lemmas() {
    for n in 2..=3u8 {
        for r in 2..=3usize {
            for i in 2..=r {
                for anti in [false, true] {
                    assert_pass(
                        &check_axq_sxq(n, r, i, anti, &bounds()),
                        &format!("axq n={n} r={r} i={i} anti={anti}"),
                    );
                }
            }
        }
    }
    for n in 2..=3u8 {
        for r in 3..=4usize {
            for i in 1..=r {
                for j in i + 1..=r {
                    for k in j + 1..=r {
                        assert_pass(
                            &check_claim_lemma(n, r, i, j, k, false, &bounds()),
                            &format!("claim n={n} ({i},{j},{k})"),
                        );
                    }
                }
            }
        }
    }
    for m in 2..=4usize {
        assert_pass(&check_huks_expansion(4, m, &bounds()), &format!("expansion m={m}"));
    }
    for p in [0usize, 1] {
        assert_pass(&check_huks_phi_psi(4, p, &bounds()), &format!("phi-psi p={p}"));
    }
    for m in 2..=3usize {
        for side in [Side::X, Side::Y] {
            assert_pass(
                &check_odd_expansion(3, m, side, &bounds()),
                &format!("odd expansion m={m} {side:?}"),
            );
        }
    }
    for part in [1usize, 2] {
        assert_pass(&check_odd_anti(3, 1, part, &bounds()), &format!("odd-anti part {part}"));
    }
    line(8, "tensor-operator lemmas", true);
}

#[test]
fn criterion_09_negative_controls() {
    let controls = [
        "mutation-capelli-zshift",
        "mutation-huks-shift",
        "mutation-classical-shift",
        "mutation-turnbull-shift",
        "mutation-okounkov-content",
        "mutation-claim-dropq",
        "mutation-pfaffian-sign",
        "mutation-williamson-vdrop",
    ];
    for id in controls {
        let report = run_check(id, &Default::default(), &bounds()).unwrap();
        assert_eq!(report.status, Status::Fail, "{id} must fail");
        assert!(report.witness.is_some(), "{id} must carry a concrete witness");
    }
    line(9, "mutation controls fail with witnesses", true);
}

#[test]
fn criterion_10_engine_invariants() {
    for family in [
        "capelli",
        "capelli-rect",
        "turnbull-sym",
        "turnbull-anti",
        "huks-x",
        "huks-y",
        "weyl",
    ] {
        assert_pass(&check_assoc_fuzz(family, 1729, 1000), &format!("assoc {family}"));
    }
    assert_pass(&check_idempotence(1729), "idempotence");
    assert_pass(
        &capelli_core::verify::checks::check_symmetry_compat(),
        "symmetry compatibility",
    );
    assert_pass(&capelli_core::verify::checks::check_xh_commute(), "[X,H] = 0");
    for n in 1..=2u8 {
        assert_pass(&check_action_oracle(n, 1729, 200), &format!("action oracle n={n}"));
    }
    assert_pass(&check_cross_oracles(&bounds()), "cross oracles");
    line(10, "engine invariants and cross-oracles", true);
}

#[test]
fn criterion_11_full_default_suite() {
    let config = SuiteConfig::default_grid();
    let t0 = Instant::now();
    let first = run_suite(&config).expect("default grid is well formed");
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs() < 30 * 60,
        "default suite took {elapsed:?}, budget is 30 minutes"
    );
    assert!(
        first.summary.all_ok,
        "default suite has unexpected outcomes: {:?}",
        first.summary.unexpected
    );
    assert_eq!(first.summary.fail, 8, "exactly the mutation controls fail");
    assert_eq!(first.summary.skipped, 0);

    // Schema round-trip for every emitted report.
    let json = serde_json::to_string(&first.reports).unwrap();
    let parsed: Vec<CheckReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, first.reports);
    for report in &first.reports {
        assert_eq!(
            report.status == Status::Fail,
            report.witness.is_some(),
            "witness present iff status is fail ({})",
            report.check_id
        );
    }

    // Reproducible apart from timing fields.
    let second = run_suite(&config).expect("default grid is well formed");
    let strip = |reports: &[CheckReport]| -> String {
        let mut rs = reports.to_vec();
        for r in &mut rs {
            r.elapsed_ms = 0;
        }
        serde_json::to_string(&rs).unwrap()
    };
    assert_eq!(strip(&first.reports), strip(&second.reports));
    line(11, "full default suite", true);
}
