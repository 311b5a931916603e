use std::path::PathBuf;
use std::process::{Command, Output};

use hexvalid::cli::{
    cmd_bench, cmd_check, cmd_compare, parse_hexlist, BenchOptions, CheckOptions, CompareOptions, Format,
    METHOD_CORNER_TETS, METHOD_SCALED_JACOBIAN,
};
use hexvalid::dataset::Mix;
use hexvalid::Status;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn hexvalid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexvalid"))
        .args(args)
        .env_remove("HEXVALID_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn jsonl(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn unit_cube_exits_zero() {
    let out = hexvalid(&[
        "check",
        fixture("unit_cube.hexlist").to_str().unwrap(),
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = jsonl(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["status"], "valid");
    assert_eq!(lines[1]["summary"]["valid"], 1);
}

#[test]
fn counterexamples_exit_one_with_expected_statuses() {
    let out = hexvalid(&[
        "check",
        fixture("counterexamples.hexlist").to_str().unwrap(),
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let statuses: Vec<_> = jsonl(&out)
        .iter()
        .filter_map(|v| v["status"].as_str().map(String::from))
        .collect();
    assert_eq!(statuses, ["invalid", "valid", "invalid"]);
}

#[test]
fn header_only_file_is_empty_and_valid() {
    let out = hexvalid(&["check", fixture("empty.hexlist").to_str().unwrap(), "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = jsonl(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["summary"]["elements"], 0);
}

#[test]
fn parse_errors_exit_two_with_location() {
    for (file, needle) in [
        ("missing_node.hexlist", "'short'"),
        ("duplicate_id.hexlist", "duplicate"),
        ("non_finite.hexlist", "'broken'"),
        ("does_not_exist.hexlist", "does_not_exist"),
    ] {
        let out = hexvalid(&["check", fixture(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(file) && err.contains(needle), "{file}: {err}");
        assert!(out.stdout.is_empty(), "{file}");
    }
    let err = String::from_utf8_lossy(&hexvalid(&["check", fixture("missing_node.hexlist").to_str().unwrap()]).stderr)
        .to_string();
    assert!(err.contains("missing_node.hexlist:19:"), "{err}");
}

#[test]
fn quiet_prints_nothing() {
    let out = hexvalid(&["check", fixture("counterexamples.hexlist").to_str().unwrap(), "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_flags_are_rejected() {
    let path = fixture("unit_cube.hexlist");
    let path = path.to_str().unwrap();
    assert_eq!(hexvalid(&["check", path, "--format", "xml"]).status.code(), Some(2));
    assert_eq!(hexvalid(&["check", path, "--zero-tol", "-1"]).status.code(), Some(2));
    assert_eq!(hexvalid(&["bench", "--mix", "some"]).status.code(), Some(2));
}

/// Drops the timing fields so reports can be compared byte for byte.
fn without_timing(text: &str) -> String {
    text.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            if let Some(s) = v.get_mut("summary").and_then(|s| s.as_object_mut()) {
                s.remove("wall_time_s");
                s.remove("elements_per_second");
            }
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn reports_are_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("random.hexlist");
    let hexes = hexvalid::dataset::synthetic(3000, Mix::Mixed, 9);
    let ids: Vec<String> = (0..hexes.len()).map(|i| format!("e{i}")).collect();
    let mut file = std::fs::File::create(&path).unwrap();
    hexvalid::cli::write_hexlist(&mut file, ids.iter().map(String::as_str).zip(&hexes)).unwrap();
    drop(file);

    let path = path.to_str().unwrap();
    let one = hexvalid(&["check", path, "--format", "jsonl", "--jobs", "1"]);
    let four = hexvalid(&["check", path, "--format", "jsonl", "--jobs", "4"]);
    let env = Command::new(env!("CARGO_BIN_EXE_hexvalid"))
        .args(["check", path, "--format", "jsonl"])
        .env("HEXVALID_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(1));
    let reference = without_timing(&stdout(&one));
    assert_eq!(reference, without_timing(&stdout(&four)));
    assert_eq!(reference, without_timing(&stdout(&env)));
    assert_eq!(reference.lines().count(), 3001);
}

#[test]
fn check_summary_matches_records() {
    let opts = CheckOptions {
        format: Format::Jsonl,
        ..Default::default()
    };
    let mut buf = Vec::new();
    let run = cmd_check(&fixture("commented.hexlist"), &opts, &mut buf).unwrap();
    assert_eq!(run.exit_code(), 0);
    assert_eq!(run.summary.elements, 2);
    assert_eq!(
        run.summary.valid,
        run.records.iter().filter(|r| r.status == Status::Valid).count()
    );
    assert_eq!(parse_hexlist(fixture("commented.hexlist")).unwrap().len(), 2);
}

#[test]
fn compare_counts_against_robust_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, h: &hexvalid::HexNodes| {
        let p = dir.path().join(name);
        let mut f = std::fs::File::create(&p).unwrap();
        hexvalid::cli::write_hexlist(&mut f, [("x", h)]).unwrap();
        p
    };
    let fig_a = write("a.hexlist", &hexvalid::counterexamples::invalid_positive_at_27_nodes());
    let fig_c = write("c.hexlist", &hexvalid::counterexamples::invalid_good_corner_quality());

    let opts = CompareOptions {
        quality_min: 0.5,
        ..Default::default()
    };
    let r = cmd_compare(&fig_a, &opts, &mut Vec::new()).unwrap();
    assert_eq!(r.method(METHOD_CORNER_TETS).unwrap().false_valid, 1);
    let r = cmd_compare(&fig_c, &opts, &mut Vec::new()).unwrap();
    assert_eq!(r.method(METHOD_SCALED_JACOBIAN).unwrap().false_valid, 1);

    let out = hexvalid(&[
        "compare",
        fig_c.to_str().unwrap(),
        "--quality-min",
        "0.5",
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = jsonl(&out);
    let q = lines.iter().find(|v| v["method"] == METHOD_SCALED_JACOBIAN).unwrap();
    assert_eq!(q["false_valid"], 1);
    assert_eq!(lines.last().unwrap()["summary"]["invalid"], 1);
}

#[test]
fn bench_is_reproducible() {
    let opts = BenchOptions {
        count: 20_000,
        mix: Mix::Mixed,
        seed: 7,
        ..Default::default()
    };
    let a = cmd_bench(&opts, &mut Vec::new()).unwrap();
    let b = cmd_bench(&opts, &mut Vec::new()).unwrap();
    assert_eq!(a.dataset_digest, b.dataset_digest);
    assert_eq!((a.valid, a.invalid), (b.valid, b.invalid));
    assert!(a.single_thread_rate > 0.0);

    let out = hexvalid(&["bench", "--count", "0", "--jobs", "2", "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &jsonl(&out)[0];
    assert_eq!(v["count"], 0);
    assert_eq!(v["single_thread_rate"], 0.0);

    let run = |seed: &str| {
        let o = hexvalid(&[
            "bench", "--count", "1000", "--seed", seed, "--jobs", "1", "--format", "jsonl",
        ]);
        jsonl(&o)[0]["dataset_digest"].as_str().unwrap().to_string()
    };
    assert_eq!(run("42"), run("42"));
    assert_ne!(run("42"), run("43"));
}
