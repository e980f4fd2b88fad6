use std::io::Write;
use std::process::{Command, Stdio};

fn knotpoly(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn good_input_exits_zero() {
    let (code, out, _) = knotpoly(&["invariant", "--kinds", "alexander,jones"], "3\n2 2\n");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let first: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(first["kind"], "alexander");
    assert_eq!(first["value"], "1*x^0 + -1*x^1 + 1*x^2");
}

#[test]
fn bad_line_exits_two() {
    let (code, out, err) = knotpoly(&["invariant", "--kinds", "jones"], "3\nfoo(\n");
    assert_eq!(code, 2);
    assert!(out.contains("\"kind\":\"jones\""));
    assert!(format!("{out}{err}").contains("\"line\":2"));
}

#[test]
fn empty_input_exits_zero() {
    let (code, out, _) = knotpoly(&["invariant"], "");
    assert_eq!(code, 0);
    assert!(out.trim().is_empty());
}

#[test]
fn unknown_kind_is_fatal() {
    let (code, _, err) = knotpoly(&["invariant", "--kinds", "bogus"], "3\n");
    assert_eq!(code, 1);
    assert!(err.contains("bogus"));
}

#[test]
fn collide_reports_rows() {
    let (code, out, _) = knotpoly(&["collide", "--kinds", "alexander", "--format", "csv"], "3\n2 1 2\n4\n");
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().count() >= 2);
}
