//! End-to-end tests of the command-line surface: exit codes, report
//! formatting, JSON emission, and suite configuration files.

use std::collections::BTreeMap;
use std::process::Command;

fn capelli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_capelli"))
}

#[test]
fn check_pass_exits_zero() {
    let out = capelli().args(["check", "huks-even", "--n", "2"]).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("PASS huks-even"));
}

#[test]
fn parity_violation_exits_two() {
    let out = capelli().args(["check", "huks-even", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("usage error"));
}

#[test]
fn unknown_check_and_param_exit_two() {
    let out = capelli().args(["check", "no-such-check"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = capelli()
        .args(["check", "huks-even", "--bogus", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_check_exits_one_with_witness() {
    let out = capelli().args(["check", "mutation-huks-shift"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("witness monomial"));
}

#[test]
fn list_covers_documented_checks() {
    let out = capelli().arg("list").output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    for id in ["capelli-general", "turnbull-sym", "huks-even", "pf-laplace", "okounkov"] {
        assert!(stdout.contains(id), "list output missing {id}");
    }
}

#[test]
fn model_notes_flag() {
    let out = capelli().arg("--model-notes").output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("CENTRAL"));
}

#[test]
fn suite_with_config_and_json() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("suite.toml");
    let json_path = dir.join("reports.json");
    std::fs::write(
        &config_path,
        r#"
seed = 7

[[check]]
id = "huks-even"
params = { n = "2" }

[[check]]
id = "pf-congruence"
params = { n = "4" }

[[check]]
id = "mutation-huks-shift"
expect = "fail"
"#,
    )
    .unwrap();
    let out = capelli()
        .args([
            "suite",
            "--config",
            config_path.to_str().unwrap(),
            "--json",
            json_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("summary: 2 pass, 1 fail, 0 skipped, 0 unexpected"));
    assert!(stdout.contains("control satisfied"));

    // The JSON payload round-trips through the report schema and is
    // byte-identical across runs apart from timing fields.
    let text = std::fs::read_to_string(&json_path).unwrap();
    let reports: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert!(r.get("check_id").is_some());
        assert!(r.get("status").is_some());
        assert!(r.get("term_counts").is_some());
    }
    let strip = |mut vals: Vec<serde_json::Value>| -> String {
        for v in &mut vals {
            v.as_object_mut().unwrap().insert("elapsed_ms".into(), 0.into());
        }
        serde_json::to_string(&vals).unwrap()
    };
    let json_path2 = dir.join("reports2.json");
    let out = capelli()
        .args([
            "suite",
            "--config",
            config_path.to_str().unwrap(),
            "--json",
            json_path2.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text2 = std::fs::read_to_string(&json_path2).unwrap();
    let reports2: Vec<serde_json::Value> = serde_json::from_str(&text2).unwrap();
    assert_eq!(strip(reports), strip(reports2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn suite_with_unsatisfied_control_exits_one() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-ctl-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("suite.toml");
    // A passing check declared as expected-fail is an unexpected outcome.
    std::fs::write(
        &config_path,
        r#"
[[check]]
id = "pf-congruence"
params = { n = "4" }
expect = "fail"
"#,
    )
    .unwrap();
    let out = capelli()
        .args(["suite", "--config", config_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn empty_config_runs_nothing() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("empty.toml");
    std::fs::write(&config_path, "").unwrap();
    let out = capelli()
        .args(["suite", "--config", config_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("summary: 0 pass, 0 fail, 0 skipped, 0 unexpected"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_env_var_is_honored() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("env.toml");
    std::fs::write(
        &config_path,
        r#"
[[check]]
id = "engine-symmetry"
"#,
    )
    .unwrap();
    let out = capelli()
        .env("CAPELLI_SUITE_CONFIG", config_path.to_str().unwrap())
        .arg("suite")
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("summary: 1 pass"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_config_exits_two() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("bad.toml");
    std::fs::write(&config_path, "check = \"not a table\"").unwrap();
    let out = capelli()
        .args(["suite", "--config", config_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn check_report_fields_match_library_run() {
    // The CLI prints the same verdict the library computes.
    let out = capelli()
        .args(["check", "classical-capelli", "--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report = capelli_core::verify::run_check(
        "classical-capelli",
        &{
            let mut m = BTreeMap::new();
            m.insert("n".to_string(), "2".to_string());
            m
        },
        &capelli_core::verify::ResourceBounds::default(),
    )
    .unwrap();
    assert_eq!(report.status, capelli_core::verify::Status::Pass);
}
