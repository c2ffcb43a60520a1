//! End-to-end checks of the binary: flag handling, output formats, and
//! the exit-code contract (0 ok, 1 violation, 2 usage, 3 resource).

use std::process::{Command, Output};

fn josephus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_josephus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_defaults_to_orbit_one_based() {
    let out = josephus(&["solve", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn solve_zero_based_matches_the_listing_convention() {
    let out = josephus(&["solve", "--n", "5", "--k", "2", "--indexing", "zero"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn solve_prints_both_conventions_on_request() {
    let out = josephus(&["solve", "--n", "5", "--k", "2", "--indexing", "both"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "one=3 zero=2\n");
}

#[test]
fn solve_agrees_across_algorithms() {
    for algo in ["orbit", "linear", "block", "simulate"] {
        let out = josephus(&["solve", "--n", "100", "--k", "7", "--algo", algo]);
        assert_eq!(out.status.code(), Some(0), "algo {algo}");
        assert_eq!(stdout(&out), "50\n", "algo {algo}");
    }
}

#[test]
fn solve_rejects_n_zero_as_usage_error() {
    let out = josephus(&["solve", "--n", "0", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());
}

#[test]
fn solve_reports_overflow_as_resource_error() {
    let big = (1u64 << 40).to_string();
    let out = josephus(&["solve", "--n", &big, "--k", &big]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("too large"), "stderr: {err}");
}

#[test]
fn order_prints_removals_with_survivor_last() {
    let out = josephus(&["order", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2,4,1,5,3\n");

    let out = josephus(&["order", "--n", "1", "--k", "3"]);
    assert_eq!(stdout(&out), "1\n");

    let out = josephus(&["order", "--n", "3", "--k", "1"]);
    assert_eq!(stdout(&out), "1,2,3\n");
}

#[test]
fn order_refuses_circles_beyond_the_oracle_cap() {
    let out = josephus(&["order", "--n", "10000001", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn grundy_prints_table_values() {
    let out = josephus(&["grundy", "--k", "2", "--limit", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0,0,1,0,2\n");

    let out = josephus(&["grundy", "--k", "3", "--limit", "2"]);
    assert_eq!(stdout(&out), "0,0,0\n");
}

#[test]
fn grundy_rejects_k_one_as_usage_error() {
    let out = josephus(&["grundy", "--k", "1", "--limit", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_a_small_grid() {
    let out = josephus(&[
        "verify",
        "--max-n",
        "30",
        "--max-k",
        "5",
        "--hk-limit",
        "3000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("grundy-josephus identity"));
    assert!(text.contains("orbit-map properties"));
    assert!(text.contains("cross-algorithm grid"));
    assert!(text.contains("checks passed"));
}

#[test]
fn verify_accepts_trivially_small_bounds() {
    let out = josephus(&["verify", "--max-n", "1", "--max-k", "2", "--hk-limit", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bench_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("one.csv");
    let svg = dir.path().join("one.svg");
    let out = josephus(&[
        "bench",
        "--sweep",
        "n",
        "--fixed",
        "2",
        "--from",
        "1",
        "--to",
        "1",
        "--step",
        "1",
        "--reps",
        "1",
        "--algos",
        "orbit",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("one.csv") && text.contains("one.svg"));

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(
        lines.next(),
        Some("algorithm,n,k,reps,mean_ns,min_ns,max_ns,total_ns")
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("orbit,1,2,1,"));
    assert_eq!(lines.next(), None);

    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<?xml"));
    assert_eq!(svg_text.matches("<polyline").count(), 1);
}

#[test]
fn bench_defaults_to_all_three_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("all.csv");
    let out = josephus(&[
        "bench",
        "--sweep",
        "k",
        "--fixed",
        "10",
        "--from",
        "2",
        "--to",
        "4",
        "--step",
        "2",
        "--reps",
        "2",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    // header + 2 sweep points x 3 algorithms
    assert_eq!(csv_text.lines().count(), 7);
    for name in ["orbit", "linear", "block"] {
        assert!(csv_text.contains(&format!("\n{name},")), "{name} missing");
    }
}

#[test]
fn bench_rejects_backwards_ranges_as_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bad.csv");
    let out = josephus(&[
        "bench",
        "--sweep",
        "n",
        "--fixed",
        "2",
        "--from",
        "5",
        "--to",
        "1",
        "--step",
        "1",
        "--reps",
        "1",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_reports_unwritable_destinations_as_resource_errors() {
    let out = josephus(&[
        "bench",
        "--sweep",
        "n",
        "--fixed",
        "2",
        "--from",
        "1",
        "--to",
        "1",
        "--step",
        "1",
        "--reps",
        "1",
        "--csv",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = josephus(&["solve", "--n", "5", "--k", "2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
