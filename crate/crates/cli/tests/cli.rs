//! End-to-end tests of the qctrl binary: exit codes, output formats, and
//! the demo round trip.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn qctrl(args: &[&str]) -> Output {
    qctrl_with_env(args, &[])
}

fn qctrl_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qctrl"));
    cmd.args(args)
        .env_remove("QCTRL_TOL_ZERO")
        .env_remove("QCTRL_TOL_DEGENERACY");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("failed to launch qctrl")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn analyze_lambda_text_report() {
    let out = qctrl(&["analyze", &fixture("lambda.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pure_state=no"), "{text}");
    assert!(text.contains("dark states: 1"), "{text}");
    assert!(text.contains("commutant dimension: 2"), "{text}");
    assert!(text.contains("degenerate levels"), "{text}");
}

#[test]
fn analyze_chain_json_report() {
    let out = qctrl(&["analyze", &fixture("chain.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["algebra_class"], "u(3)");
    assert_eq!(doc["lie_dimension"], 9);
    assert_eq!(doc["verdicts"]["complete"], "yes");
    assert_eq!(doc["verdicts"]["density_matrix"], "yes");
    assert_eq!(doc["verdicts"]["pure_state"], "yes");
    assert_eq!(doc["graph_criterion"], "CONTROLLABLE");
    assert_eq!(doc["chain_criterion"], "COMPLETELY_CONTROLLABLE");
    assert_eq!(doc["commutant_dimension"], 1);
    assert_eq!(doc["graph"]["edges"], serde_json::json!([[1, 2], [2, 3]]));
    assert!(doc["input_digest"].as_str().unwrap().len() == 64);
    assert!(doc["evidence"].as_array().unwrap().len() >= 5);
}

#[test]
fn malformed_documents_exit_2_with_field_diagnostics() {
    let cases = [
        ("malformed_syntax.json", "document"),
        ("malformed_missing_dim.json", "dim"),
        ("malformed_ragged.json", "h0.re[2]"),
        ("malformed_nonhermitian.json", "h0"),
    ];
    for (file, needle) in cases {
        let out = qctrl(&["analyze", &fixture(file)]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        let err = stderr(&out);
        assert!(err.contains(needle), "{file}: {err}");
    }
}

#[test]
fn missing_file_exits_2() {
    let out = qctrl(&["analyze", "/nonexistent/system.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_tolerance_flag_exits_3() {
    let out = qctrl(&["analyze", &fixture("chain.json"), "--tol-zero=-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("tolerances"));
}

#[test]
fn invalid_tolerance_env_exits_3() {
    let out = qctrl_with_env(
        &["analyze", &fixture("chain.json")],
        &[("QCTRL_TOL_DEGENERACY", "not-a-number")],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("QCTRL_TOL_DEGENERACY"));
}

#[test]
fn flags_override_environment() {
    let baseline = qctrl(&["analyze", &fixture("chain.json"), "--json"]);
    let overridden = qctrl_with_env(
        &[
            "analyze",
            &fixture("chain.json"),
            "--json",
            "--tol-zero",
            "1e-10",
            "--tol-degeneracy",
            "1e-8",
        ],
        &[("QCTRL_TOL_ZERO", "1e-3"), ("QCTRL_TOL_DEGENERACY", "1e-2")],
    );
    assert_eq!(overridden.status.code(), Some(0));
    assert_eq!(stdout(&baseline), stdout(&overridden));
}

#[test]
fn closure_prints_bare_dimension() {
    let out = qctrl(&["closure", &fixture("lambda.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "4");

    let out = qctrl(&["closure", &fixture("chain.json")]);
    assert_eq!(stdout(&out).trim(), "9");
}

#[test]
fn demo_documents_analyze_cleanly() {
    for (args, expected_dim) in [
        (vec!["demo", "lambda"], "4"),
        (vec!["demo", "chain", "--n", "3"], "9"),
        (vec!["demo", "uniform-chain", "--n", "3"], "4"),
    ] {
        let demo = qctrl(&args);
        assert_eq!(demo.status.code(), Some(0), "{args:?}");
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(&demo.stdout).unwrap();
        let path = file.path().display().to_string();

        let closure = qctrl(&["closure", &path]);
        assert_eq!(closure.status.code(), Some(0), "{args:?}: {}", stderr(&closure));
        assert_eq!(stdout(&closure).trim(), expected_dim, "{args:?}");

        let analyzed = qctrl(&["analyze", &path, "--json"]);
        assert_eq!(analyzed.status.code(), Some(0), "{args:?}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&analyzed)).unwrap();
        assert_eq!(doc["lie_dimension"].to_string(), expected_dim, "{args:?}");
    }
}

#[test]
fn demo_size_limits_exit_3() {
    for args in [
        vec!["demo", "chain", "--n", "1"],
        vec!["demo", "uniform-chain", "--n", "13"],
        vec!["demo", "lambda", "--n", "4"],
    ] {
        let out = qctrl(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
    }
}
