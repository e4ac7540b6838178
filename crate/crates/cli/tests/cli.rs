//! End-to-end tests of the `evoclass` binary: exit codes, output formats,
//! and byte-stable reports.

use std::path::Path;
use std::process::{Command, Output};

fn evoclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evoclass"))
        .args(args)
        .env_remove("EVOCLASS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_dimensions_pass() {
    for dim in ["1", "2", "3"] {
        let out = evoclass(&["verify", "--dim", dim]);
        assert!(out.status.success(), "{}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn verify_dim4_json() {
    let out = evoclass(&["verify", "--dim", "4", "--format", "json", "--field", "fp:7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 10);
}

#[test]
fn enumerate_chain_base() {
    let out = evoclass(&["enumerate", "--base", "E_4_9", "--ext", "1", "--field", "fp:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2 class orbits, 1 isomorphism classes"), "{text}");
    assert!(text.contains("e1^2 = e2, e2^2 = e3, e3^2 = e4, e4^2 = e5"), "{text}");
}

#[test]
fn enumerate_line_base() {
    let out = evoclass(&["enumerate", "--base", "E_1_1", "--ext", "1", "--field", "fp:3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1 isomorphism classes"));
}

#[test]
fn enumerate_rejects_rationals() {
    let out = evoclass(&["enumerate", "--base", "E_4_9", "--ext", "1", "--field", "q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_budget_is_partial() {
    let out = evoclass(&[
        "enumerate", "--base", "E_4_9", "--ext", "1", "--field", "fp:3", "--budget", "50",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("PARTIAL"));
}

fn write_algebra(dir: &Path, name: &str, catalog_name: &str, p: u64, alpha: Option<i64>) -> std::path::PathBuf {
    let field = evoclass_core::field::Field::fp(p).unwrap();
    let a = alpha.map(|v| field.from_i64(v));
    let alg = evoclass_core::catalog::get(catalog_name, field, a.as_ref()).unwrap();
    let path = dir.join(name);
    std::fs::write(
        &path,
        evoclass_core::json::algebra_to_string(&alg, Some(catalog_name.to_string())),
    )
    .unwrap();
    path
}

#[test]
fn isocheck_verdicts_and_exit_codes() {
    let dir = std::env::temp_dir().join("evoclass-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    // self-check: isomorphic, exit 0
    let a = write_algebra(&dir, "a.json", "E_5_21", 5, None);
    let out = evoclass(&["isocheck", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Isomorphic"));

    // distinguished pair: exit 1 with a named invariant
    let b = write_algebra(&dir, "b.json", "E_5_22", 5, None);
    let out = evoclass(&["isocheck", a.to_str().unwrap(), b.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "non-isomorphic");
    assert!(v["invariant"].as_str().unwrap().contains("Psi"));

    // family members in one realized orbit: exit 0 with witness rows
    let c = write_algebra(&dir, "c.json", "E_5_18", 13, Some(4));
    let d = write_algebra(&dir, "d.json", "E_5_18", 13, Some(10));
    let out = evoclass(&["isocheck", c.to_str().unwrap(), d.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "isomorphic");
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);

    // malformed file: usage error
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = evoclass(&["isocheck", bad.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_is_byte_stable_and_complete() {
    let out1 = evoclass(&["report", "--dim", "5"]);
    let out2 = evoclass(&["report", "--dim", "5"]);
    assert!(out1.status.success());
    assert_eq!(out1.stdout, out2.stdout);
    let text = stdout(&out1);
    assert!(text.contains("E_5_1\n"));
    assert!(text.contains("E_5_29\n"));
    assert!(text.contains("(b - a)(b - 1/a)"));

    let dir = std::env::temp_dir().join("evoclass-report-test");
    let out = evoclass(&["report", "--dim", "5", "-o", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let json_text = std::fs::read_to_string(dir.join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 29);
}

#[test]
fn verify_output_is_deterministic() {
    let a = evoclass(&["verify", "--dim", "5", "--format", "json"]);
    let b = evoclass(&["verify", "--dim", "5", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    let out = evoclass(&["verify", "--dim", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = evoclass(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = evoclass(&["enumerate", "--base", "E_9_1", "--ext", "1", "--field", "fp:3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = evoclass(&["verify", "--dim", "3", "--field", "fp:4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_evoclass"))
        .args(["enumerate", "--base", "E_4_9", "--ext", "1", "--field", "fp:3"])
        .env("EVOCLASS_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PARTIAL"));
}
