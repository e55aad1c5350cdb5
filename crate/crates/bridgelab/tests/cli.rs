//! End-to-end checks of the `bridgelab` binary: output shapes, exit codes,
//! and byte determinism across runs and worker counts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bridgelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bridgelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("bridgelab-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn awkward_exactly_prints_stated_values() {
    let out = bridgelab(&["awkward", "--k", "3", "--variant", "exactly"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P(connected) = 1/2"), "{text}");
    assert!(text.contains("E[frag] = 3/2"), "{text}");
}

#[test]
fn awkward_at_least_reports_discrepancy_without_failing() {
    let out = bridgelab(&["awkward", "--k", "3", "--variant", "at_least"]);
    assert!(out.status.success(), "at_least variant must not fail");
    let text = stdout(&out);
    assert!(text.contains("P(connected) = 2/3"), "{text}");
    assert!(text.contains("discrepancy"), "{text}");
}

#[test]
fn seq_text_format_matches_expected_line() {
    let out = bridgelab(&["seq", "--name", "forests-unlabelled", "--nmax", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1..7: 1 2 3 6 10 20 37");
}

#[test]
fn seq_bfile_format() {
    let out = bridgelab(&[
        "seq",
        "--name",
        "rooted-trees",
        "--nmax",
        "5",
        "--format",
        "bfile",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1\n2 1\n3 2\n4 4\n5 9\n");
}

#[test]
fn tau_and_renyi_print_targets() {
    let out = bridgelab(&["tau", "--n", "50"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("tau_ratio(50) ="), "{text}");
    assert!(text.contains("target tau ~ 0.5930"), "{text}");

    let out = bridgelab(&["renyi", "--n", "50"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("target e^-1/2 ~ 0.6065"));
}

#[test]
fn enumerate_output_is_byte_deterministic_across_jobs() {
    let a = temp_path("enum-a.jsonl");
    let b = temp_path("enum-b.jsonl");
    let run = |path: &PathBuf, jobs: &str| {
        let out = bridgelab(&[
            "enumerate",
            "--class",
            "all",
            "--n",
            "6",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    };
    run(&a, "1");
    run(&b, "2");
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b, "output must be independent of --jobs");
    assert_eq!(
        bytes_a
            .split(|&c| c == b'\n')
            .filter(|l| !l.is_empty())
            .count(),
        156
    );
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn enumerate_connected_flag() {
    let out = bridgelab(&["enumerate", "--class", "forests", "--n", "5", "--connected"]);
    assert!(out.status.success());
    // the 3 trees on 5 vertices
    assert_eq!(stdout(&out).lines().count(), 3);
    let out = bridgelab(&["enumerate", "--class", "forests", "--n", "5"]);
    assert_eq!(stdout(&out).lines().count(), 10);
}

#[test]
fn count_csv_small_golden() {
    let out = bridgelab(&["count", "--class", "forests", "--nmax", "4"]);
    assert!(out.status.success());
    let expect = "\
n,unlabelled_total,unlabelled_connected,rooted_connected,labelled_total,labelled_connected
1,1,1,1,1,1
2,2,1,1,2,1
3,3,1,2,7,3
4,6,2,4,38,16
";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn codec_roundtrip_prints_per_n_lines() {
    let out = bridgelab(&["codec", "--class", "forests", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.contains("pass")), "{text}");
    assert!(text.contains("members = 20"), "{text}");
}

#[test]
fn codec_emits_codewords() {
    let path = temp_path("codewords.jsonl");
    let out = bridgelab(&[
        "codec",
        "--class",
        "forests",
        "--n",
        "5",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert_eq!(content.lines().count(), 10);
    for line in content.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["code"].as_str().unwrap().contains(":r0:"));
        assert!(v["b"].as_u64().unwrap() <= 1);
    }
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_small_suite_exits_zero() {
    let out = bridgelab(&["verify", "--class", "forests", "--nmax", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[ASSERT]"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_report_files_are_byte_deterministic() {
    let a = temp_path("verify-a.json");
    let b = temp_path("verify-b.json");
    for path in [&a, &b] {
        let out = bridgelab(&[
            "verify",
            "--class",
            "cycles==3",
            "--nmax",
            "6",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, std::fs::read(&b).unwrap());
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn usage_errors_exit_2_and_name_the_cap() {
    let out = bridgelab(&["enumerate", "--class", "planar", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bridgelab(&["enumerate", "--class", "all", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap 7"), "{err}");

    let out = bridgelab(&["seq", "--name", "trees", "--nmax", "1001"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap 1000"), "{err}");

    let out = bridgelab(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_json_is_valid() {
    let out = bridgelab(&[
        "count",
        "--class",
        "cycles==3",
        "--nmax",
        "6",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "cycles==3");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5]["unlabelled_total"], "2");
}
