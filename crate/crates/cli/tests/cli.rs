use std::path::PathBuf;
use std::process::Command;

fn amalgam() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amalgam"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("amalgam-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn passing_script_exits_zero_and_writes_json() {
    let script = scratch("ok.amg", "ring A = zmod(6); ideal I = gen(A; 2); check reduced_criterion(dup(A, I));\n");
    let json = script.with_extension("json");
    let out = amalgam().arg("check").arg(&script).arg("--json").arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("reduced_criterion"));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["version"], 1);
    let report = &doc["reports"][0];
    for field in ["check", "instance", "status", "witnesses", "counterexample", "millis"] {
        assert!(report.get(field).is_some(), "missing {field}");
    }
    assert_eq!(report["status"], "pass");
}

#[test]
fn failing_check_exits_one() {
    let script = scratch("fail.amg", "ring A = zmod(4); check isomorphic(A, product(zmod(2), zmod(2)));\n");
    let out = amalgam().arg("check").arg(&script).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(1), "{stdout}");
    assert!(stdout.contains("counterexample"), "{stdout}");
}

#[test]
fn parse_error_exits_two_with_position() {
    let script = scratch("bad.amg", "ring A = zmod(6) ring B");
    let out = amalgam().arg("check").arg(&script).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:18"));
}

#[test]
fn usage_error_exits_two() {
    let out = amalgam().arg("check").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = amalgam().arg("explain").arg("no_such_check").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_flag_limits_constructions() {
    let script = scratch("guard.amg", "ring A = zmod(8); check cardinality(dup(A, whole(A)));\n");
    let out = amalgam().arg("check").arg(&script).args(["--guard", "16"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("hypothesis_not_met"));
}

#[test]
fn catalog_then_check() {
    let out_file = scratch("catalog.amg", "");
    let out = amalgam()
        .args(["catalog", "--seed", "0", "--budget", "64", "--out"])
        .arg(&out_file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = amalgam().arg("check").arg(&out_file).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn catalog_below_minimum_warns() {
    let out_file = scratch("empty.amg", "x");
    let out = amalgam()
        .args(["catalog", "--seed", "0", "--budget", "1", "--out"])
        .arg(&out_file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(std::fs::read_to_string(&out_file).unwrap(), "");
}

#[test]
fn explain_prints_the_statement() {
    let out = amalgam().args(["explain", "reduced_criterion"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("Nilp(B) ∩ J = 0"));
}
