use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn machine(args: &[&str]) -> (i32, Vec<Value>) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = run(&full);
    let records = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect();
    (code(&out), records)
}

#[test]
fn cubic_with_double_root() {
    let (c, r) = machine(&["certify", "2 -3 0 1"]);
    assert_eq!(c, 2);
    assert_eq!(r[0]["verdict"], "degenerate");
    assert_eq!(r[0]["profile"], "{1:2, -2:1}");
    assert_eq!(r[0]["degenerate"]["profile"], serde_json::json!([2, 1]));
}

#[test]
fn cubic_with_complex_roots() {
    let out = run(&["certify", "1", "0", "0", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not-all-real"));
}

#[test]
fn all_real_cubic() {
    let (c, r) = machine(&["certify", "-6 11 -6 1"]);
    assert_eq!(c, 0);
    assert_eq!(r[0]["verdict"], "all-real-distinct");
    assert_eq!(r[0]["exit_code"], 0);
}

#[test]
fn quintic_triple_and_double() {
    let (c, r) = machine(&["certify", "-72 60 10 -15 0 1"]);
    assert_eq!(c, 2);
    assert_eq!(r[0]["profile"], "{2:3, -3:2}");
}

#[test]
fn triple_double_family() {
    let (c, r) = machine(&["quintic", "degenerate", "triple", "-9/2"]);
    assert_eq!(c, 0);
    let members = r[0]["members"].as_array().unwrap();
    assert_eq!(members.len(), 2);
    let mut seen: Vec<(String, String)> = members
        .iter()
        .map(|m| {
            assert_eq!(m["r"], "3/1");
            (
                m["q"]["exact"].as_str().unwrap().to_string(),
                m["s"]["exact"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    seen.sort();
    assert_eq!(
        seen,
        vec![
            ("-1/1".into(), "18/5".into()),
            ("1/1".into(), "-18/5".into())
        ]
    );
}

#[test]
fn quintic_check_reports_degenerate() {
    let (c, r) = machine(&["quintic", "check", "-9/2", "1", "3", "-18/5"]);
    assert_eq!(c, 2);
    assert_eq!(r[0]["certificate"]["verdict"], "degenerate");
    assert_eq!(r[0]["poly"], "-72 60 10 -15 0 1");
}

#[test]
fn count_respects_half_open_range() {
    let (c, r) = machine(&["count", "-6 11 -6 1", "--lo", "1", "--hi", "3"]);
    assert_eq!(c, 0);
    assert_eq!(r[0]["count"], 2);
    let (_, r) = machine(&["count", "-6", "11", "-6", "1", "--lo", "-1/2"]);
    assert_eq!(r[0]["count"], 3);
}

#[test]
fn interval_membership_exit_codes() {
    let (c, r) = machine(&["interval", "1 -5 0 1"]);
    assert_eq!(c, 0);
    assert_eq!(r[0]["a0_position"], "inside");
    let (c, _) = machine(&["interval", "10 -5 0 1"]);
    assert_eq!(c, 1);
    // x^3 - 3x + 2 sits on the boundary
    let (c, _) = machine(&["interval", "2 -3 0 1"]);
    assert_eq!(c, 2);
}

#[test]
fn built_polynomials_certify() {
    let (c, r) = machine(&["build", "--degree", "5", "--count", "3", "--seed", "7"]);
    assert_eq!(c, 0);
    assert_eq!(r.len(), 3);
    for rec in &r {
        let (c, cert) = machine(&["certify", rec["poly"].as_str().unwrap()]);
        assert_eq!(c, 0, "{}", rec["poly"]);
        assert_eq!(cert[0]["verdict"], "all-real-distinct");
    }
}

#[test]
fn build_is_reproducible() {
    let a = stdout(&run(&["build", "--degree", "4", "--seed", "11"]));
    let b = stdout(&run(&["build", "--degree", "4", "--seed", "11"]));
    assert_eq!(a, b);
}

#[test]
fn degenerate_verb() {
    let (c, r) = machine(&["degenerate", "-1 1 1 -1"]);
    assert_eq!(c, 2);
    assert_eq!(r[0]["witness_consistent"], true);
    let (c, _) = machine(&["degenerate", "-6 11 -6 1"]);
    assert_eq!(c, 0);
}

#[test]
fn compare_flags_corrupt_lines() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "# x^2 + 1\n1 0 1\n-6 11 -6 1\n").unwrap();
    let (c, r) = machine(&["compare", good.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(r[0]["interlace"], "not-all-real");
    assert_eq!(r[0]["sturm"], false);
    assert_eq!(r.last().unwrap()["disagreements"], 0);

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 0 1\n1 zz 3\n").unwrap();
    let out = run(&["compare", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
}

#[test]
fn conjecture_random_batch() {
    let dir = tempfile::tempdir().unwrap();
    let ce = dir.path().join("ce.txt");
    let (c, r) = machine(&[
        "conjecture",
        "--random",
        "15",
        "--degree",
        "5",
        "--seed",
        "2",
        "--counterexamples",
        ce.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    assert_eq!(r[0]["total"], 15);
    assert!(ce.exists());
}

#[test]
fn parse_errors_exit_64() {
    let out = run(&["certify", "1 x 2"]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));
    assert_eq!(code(&run(&["quintic", "check", "1", "2", "3"])), 64);
    assert_eq!(code(&run(&["no-such-verb"])), 64);
    assert_eq!(code(&run(&["--tol", "0", "certify", "1 1"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn machine_output_is_stable() {
    let args = ["--format", "machine", "certify", "-72 60 10 -15 0 1"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 1);
    let v: Value = serde_json::from_str(a.trim()).unwrap();
    // rationals are always written as num/den
    assert_eq!(v["shift"], "0/1");
    for level in v["levels"].as_array().unwrap() {
        assert!(level["constant"].as_str().unwrap().contains('/'));
    }
}

#[test]
fn s_interval_verb() {
    let (c, r) = machine(&["quintic", "s-interval", "-3", "1", "1"]);
    assert_eq!(c, 1);
    assert_eq!(r[0]["r3_three_real_roots"]["delta2"], "57/1");
}
