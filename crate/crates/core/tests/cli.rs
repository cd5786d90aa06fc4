//! End-to-end tests of the command-line front end: exit codes, output
//! shape, diagnostics and determinism.

use std::path::{Path, PathBuf};
use std::process::Command;

use orthomeans::cli;
use orthomeans::partitions::enumerate_complete;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orthomeans").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SQUARE_OF_SUM: &str =
    r#"{"s": 2, "n": 2, "d": 1, "terms": [{"key": [0, 0], "coeff": [1]}, {"key": [0, 1], "coeff": [1]}, {"key": [1, 1], "coeff": [1]}]}"#;

#[test]
fn partitions_list_matches_enumeration() {
    let r = run(&["partitions", "list", "--s", "4"]);
    assert_eq!(r.code, 0);
    let doc = json(&r);
    assert_eq!(doc["s"], 4);
    let expected: Vec<Vec<u64>> = enumerate_complete(4).unwrap().iter().map(|cp| cp.parts().to_vec()).collect();
    let got: Vec<Vec<u64>> = serde_json::from_value(doc["partitions"].clone()).unwrap();
    assert_eq!(got, expected);
    assert_eq!(got.len(), 2);
}

#[test]
fn partitions_check_exit_codes() {
    let yes = run(&["partitions", "check", "--parts", "1,2,1"]);
    assert_eq!(yes.code, 0);
    assert_eq!(json(&yes)["complete"], true);
    let no = run(&["partitions", "check", "--parts", "2,2"]);
    assert_eq!(no.code, 1);
    assert_eq!(json(&no)["complete"], false);
    assert_eq!(run(&["partitions", "check", "--parts", "1,1", "--s", "3"]).code, 1);
    assert_eq!(run(&["partitions", "list", "--s", "0"]).code, 2);
}

#[test]
fn means_eval_matches_closed_form() {
    let dir = TempDir::new().unwrap();
    let inputs = write(&dir, "two.json", "[[1.0, 2.0, 0.5], [3.0, 6.0, 0.0]]");
    for method in ["closed", "lagrange", "grid"] {
        let r = run(&["means", "eval", "--mean", "hm", "--method", method, "--s", "2", "--inputs", s(&inputs)]);
        assert_eq!(r.code, 0, "{}", r.err);
        let doc = json(&r);
        let value: Vec<f64> = serde_json::from_value(doc["value"].clone()).unwrap();
        let oracle = [2.0 / (1.0 + 1.0 / 3.0), 2.0 / (0.5 + 1.0 / 6.0), 0.0];
        let tol = if method == "grid" { 1e-4 } else { 1e-12 };
        for (v, o) in value.iter().zip(oracle) {
            assert!((v - o).abs() <= tol * o.max(1.0), "{method}: {v} vs {o}");
        }
        assert_eq!(doc["residual_bound"].is_null(), method != "grid");
    }
}

#[test]
fn means_eval_weighted_and_exact() {
    let dir = TempDir::new().unwrap();
    let inputs = write(&dir, "three.json", r#"{"inputs": [[16.0], [1.0], [1.0]]}"#);
    let r = run(&["means", "eval", "--mean", "wgm", "--weights", "2,1,1", "--inputs", s(&inputs)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json(&r)["value"][0], 4.0);
    let r = run(&["means", "eval", "--mean", "wgm", "--weights", "1/2,1/4,1/4", "--method", "lagrange", "--inputs", s(&inputs)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!((json(&r)["value"][0].as_f64().unwrap() - 4.0).abs() < 1e-12);

    let exact = write(&dir, "exact.json", r#"[["1", "1/2"], ["3", "1/6"]]"#);
    let r = run(&["means", "eval", "--mean", "hm", "--s", "2", "--exact", "--inputs", s(&exact)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json(&r)["value"], serde_json::json!(["3/2", "1/4"]));
    let r = run(&["means", "eval", "--mean", "gm", "--exact", "--inputs", s(&exact)]);
    assert_eq!(r.code, 2, "1/12 has no rational square root");
}

#[test]
fn malformed_inputs_name_the_field() {
    let dir = TempDir::new().unwrap();
    let negative = write(&dir, "neg.json", "[[1.0, 2.0], [3.0, -1.0]]");
    let r = run(&["means", "eval", "--mean", "hm", "--s", "2", "--inputs", s(&negative)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("inputs[1]"), "{}", r.err);

    let bad_key = write(&dir, "p.json", r#"{"s": 2, "n": 2, "d": 1, "terms": [{"key": [0, "x"], "coeff": [1]}]}"#);
    let r = run(&["poly", "eval", "--poly", s(&bad_key), "--inputs", s(&negative)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("terms[0].key"), "{}", r.err);

    let missing = write(&dir, "q.json", r#"{"s": 2, "n": 2, "terms": []}"#);
    let r = run(&["verify", "hm", "--poly", s(&missing)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("`d`"), "{}", r.err);

    let r = run(&["means", "eval", "--mean", "hm", "--inputs", "/nonexistent/file.json"]);
    assert_eq!(r.code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify", "hm", "--s", "x", "--n", "2"]).code, 2);
    assert_eq!(run(&["verify", "hm", "--s", "2"]).code, 2);
    assert_eq!(run(&["verify", "hm", "--s", "2", "--n", "2", "--trials", "0"]).code, 2);
    assert_eq!(run(&["verify", "wgm", "--s", "4", "--n", "2", "--partition", "2,2"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("verify"));
}

#[test]
fn verify_single_claims() {
    for claim in ["rmp", "gm", "schur", "ortho", "hm", "geos", "wgm", "cross"] {
        let r = run(&["verify", claim, "--s", "3", "--n", "3", "--trials", "50", "--seed", "1", "--d", "2"]);
        assert_eq!(r.code, 0, "{claim}: {}", r.out);
        let doc = json(&r);
        assert_eq!(doc["passed"], true);
        assert_eq!(doc["trials"].as_u64().unwrap() % 50, 0);
    }
    let r = run(&["verify", "wgm", "--s", "4", "--n", "2", "--trials", "10", "--partition", "2,1,1"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["trials"], 10);
}

#[test]
fn verify_fails_on_non_additive_polynomial() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", SQUARE_OF_SUM);
    let r = run(&["verify", "cross", "--poly", s(&p), "--trials", "20"]);
    assert_eq!(r.code, 1);
    let doc = json(&r);
    assert_eq!(doc["verdict"], "fail");
    assert!(doc["counterexample"].is_object());
}

#[test]
fn falsify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", SQUARE_OF_SUM);
    let r = run(&["verify", "falsify", "--target", "hm", "--poly", s(&p)]);
    assert_eq!(r.code, 0);
    let doc = json(&r);
    assert_eq!(doc["counterexample"]["residual"], 1.0);
    assert_eq!(doc["counterexample"]["inputs"], serde_json::json!([[1.0, 0.0], [0.0, 1.0]]));
    let r = run(&["verify", "falsify", "--target", "wgm", "--partition", "1,1", "--poly", s(&p)]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["max_residual"], 1.0);
    let r = run(&["verify", "falsify", "--poly", s(&p), "--budget", "0"]);
    assert_eq!(r.code, 3);
    assert_eq!(json(&r)["verdict"], "inconclusive");
    // a generated non-additive polynomial
    let r = run(&["verify", "falsify", "--target", "gm", "--s", "3", "--n", "4", "--seed", "5"]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    // an additive polynomial has nothing to falsify
    let diag = write(&dir, "d.json", r#"{"s": 2, "diagonal": [[1.0], [2.0]]}"#);
    assert_eq!(run(&["verify", "falsify", "--poly", s(&diag)]).code, 2);
}

#[test]
fn verify_all_is_deterministic_and_summarized() {
    let args = ["verify", "all", "--s", "3", "--n", "4", "--trials", "1000", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0, "{}", a.out);
    assert_eq!(a.out, b.out);
    let doc = json(&a);
    assert_eq!(doc["passed"], true);
    let ids: Vec<&str> = doc["summary"].as_array().unwrap().iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["RMP", "GM", "SCHUR", "ORTHO", "HM", "GEOS", "WGM", "CROSS_TERMS"]);

    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("summary.csv");
    let c = run(&["verify", "all", "--s", "3", "--n", "4", "--trials", "100", "--seed", "7", "--format", "csv", "--summary-csv", s(&csv_path)]);
    assert_eq!(c.code, 0);
    let mut lines = c.out.lines();
    assert_eq!(lines.next(), Some("claim_id,trials,max_residual,tolerance,passed"));
    assert_eq!(lines.count(), 8);
    assert_eq!(std::fs::read_to_string(&csv_path).unwrap(), c.out);
    assert_ne!(run(&["verify", "all", "--s", "3", "--n", "4", "--trials", "1000", "--seed", "8"]).out, a.out);
}

#[test]
fn poly_commands() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", SQUARE_OF_SUM);
    let fs = write(&dir, "fs.json", "[[1.0, 2.0], [3.0, -1.0]]");
    let r = run(&["poly", "eval", "--poly", s(&p), "--inputs", s(&fs)]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["values"], serde_json::json!([[9.0], [4.0]]));
    let r = run(&["poly", "polarize", "--poly", s(&p), "--inputs", s(&fs)]);
    assert_eq!(r.code, 0);
    // P̌(f,g) = f1 g1 + f1 g2 + f2 g1 + f2 g2 = (f1 + f2)(g1 + g2)
    assert!((json(&r)["polarized"][0].as_f64().unwrap() - 6.0).abs() < 1e-12);
    let r = run(&["poly", "check-oa", "--poly", s(&p), "--trials", "50"]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r)["structural"], false);
    let diag = write(&dir, "d.json", r#"{"diagonal": [[1.0], [-2.0]]}"#);
    let r = run(&["poly", "check-oa", "--poly", s(&diag), "--s", "3", "--trials", "50"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(json(&r)["orthogonally_additive"], true);
}

#[test]
fn binary_passes_exit_codes_through() {
    let bin = env!("CARGO_BIN_EXE_orthomeans");
    let ok = Command::new(bin).args(["partitions", "list", "--s", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let fail = Command::new(bin).args(["partitions", "check", "--parts", "3"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).args(["verify"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
