use std::process::{Command, Output};

fn cubicrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubicrel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_passes_with_json_by_default() {
    let o = cubicrel(&["validate"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_reports_zero_residual() {
    let o = cubicrel(&["--format", "text", "verify", "szs-sym"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[pass] residual: 0"));
}

#[test]
fn failing_check_is_named_with_nonzero_exit() {
    let o = cubicrel(&["--format", "text", "verify", "deg5"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("first failing check: verify deg5: residual"), "{err}");
}

#[test]
fn unknown_relation_is_an_error() {
    let o = cubicrel(&["verify", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_prints_the_display() {
    let o = cubicrel(&["--format", "text", "decompose", "S^(2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[S^(2)] = 1 + (1 + χ3) L + (3 + χ3 + χ10) L^2 + (1 + χ3) L^3 + L^4");
}

#[test]
fn find_relation_recovers_the_fano_relation() {
    let o = cubicrel(&["find-relation", "--degree", "2", "--with", "F", "--distinguished", "S^(2)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nullity"], 1);
    assert!(v["minimal"].is_object());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = cubicrel(&["dump-classes"]);
    let b = cubicrel(&["dump-classes"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("cubicrel-cli-{}.tsv", std::process::id()));
    let o = cubicrel(&["--format", "tsv", "--out", path.to_str().unwrap(), "classes"]);
    assert!(o.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(body.lines().count(), 26);
    assert!(body.starts_with("column\tlabel\torder\tsize\ttrace\trepresentative\n1\t"));
}

#[test]
fn burnside_case_runs() {
    let o = cubicrel(&["--format", "tsv", "burnside", "--case", "a1"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().skip(1).all(|l| l.split('\t').nth(2) == Some("pass")));
}

#[test]
fn export_lists_the_lines() {
    let o = cubicrel(&["--format", "tsv", "export", "lines"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 28);
}
