use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn kneserlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneserlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn build_writes_dimacs() {
    let out = kneserlab(&["build", "--family", "D", "--rank", "4", "--type", "2", "--p", "2", "--format", "dimacs"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let mut header = None;
    for line in lines.by_ref() {
        if !line.starts_with("c ") {
            header = Some(line);
            break;
        }
    }
    let fields: Vec<&str> = header.unwrap().split_whitespace().collect();
    assert_eq!(fields[..2], ["p", "edge"]);
    let (v, e): (usize, usize) = (fields[2].parse().unwrap(), fields[3].parse().unwrap());
    assert_eq!(v, 1575);
    let edges: Vec<(usize, usize)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(f[0], "e");
            (f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(edges.len(), e);
    assert!(edges.iter().all(|&(i, j)| 1 <= i && i < j && j <= v));
}

#[test]
fn build_json_lists_vertices_with_bases() {
    let out = kneserlab(&["build", "--family", "A", "--rank", "2", "--type", "1,2", "--p", "2"]);
    assert_eq!(code(&out), 0);
    let j = stdout_json(&out);
    assert_eq!(j["schema"], 1);
    assert_eq!(j["vertex_count"], 21);
    assert_eq!(j["vertices"].as_array().unwrap().len(), 21);
    assert_eq!(j["sigma"].as_array().unwrap().len(), 6);
    // a point-line flag: a 1-row member and a 2-row member
    let basis = j["vertices"][0]["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 2);
}

#[test]
fn invalid_specs_are_usage_errors() {
    let out = kneserlab(&["build", "--family", "B", "--rank", "3", "--type", "2", "--p", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd p"));
    assert_eq!(code(&kneserlab(&["build", "--family", "A", "--rank", "3"])), 2);
    assert_eq!(code(&kneserlab(&["build", "--family", "Q", "--rank", "3", "--type", "1"])), 2);
    assert_eq!(code(&kneserlab(&["check-ucep", "--family", "A", "--rank", "3", "--type", "1", "--p", "4"])), 2);
    assert_eq!(code(&kneserlab(&["nonsense"])), 2);
    assert_eq!(code(&kneserlab(&[])), 2);
}

#[test]
fn check_ucep_exit_codes() {
    let out = kneserlab(&["check-ucep", "--family", "D", "--rank", "4", "--type", "2", "--p", "2", "--mode", "all"]);
    assert_eq!(code(&out), 0);
    let j = stdout_json(&out);
    assert_eq!(j["verdict"], "holds");
    assert_eq!(j["cocliques_checked"], 4096);
    assert_eq!(j["elapsed_ms"], 0);

    let out = kneserlab(&["check-ucep", "--case-from-fixture", "B3_2", "--p", "3"]);
    assert_eq!(code(&out), 3);
    let j = stdout_json(&out);
    assert_eq!(j["verdict"], "fails");
    assert!(j["witness"]["x"]["notation"].is_string());

    let out = kneserlab(&["check-ucep", "--family", "A", "--rank", "4", "--type", "2,3", "--p", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn check_ucep_is_deterministic() {
    let args = ["check-ucep", "--family", "A", "--rank", "4", "--type", "2,3", "--p", "2", "--mode", "sample", "--samples", "40", "--seed", "5"];
    let a = kneserlab(&args);
    let b = kneserlab(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["seed"], 5);
    let mut jobs = vec!["--jobs", "1"];
    jobs.extend(args);
    assert_eq!(kneserlab(&jobs).stdout, a.stdout);
}

#[test]
fn timing_is_opt_in() {
    let out = kneserlab(&["check-ucep", "--family", "A", "--rank", "3", "--type", "2", "--timing"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_json(&out)["elapsed_ms"].is_u64());
}

#[test]
fn verify_fixtures_default_and_single() {
    let out = kneserlab(&["verify-fixtures"]);
    assert_eq!(code(&out), 0);
    let j = stdout_json(&out);
    assert_eq!(j["certified"], 4);
    assert_eq!(j["fixtures"][0]["witnesses"][0]["literal"][0][1], "e3+e4+e7");

    let out = kneserlab(&["verify-fixtures", "--case", "D4_34"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["certified"], 1);

    let out = kneserlab(&["verify-fixtures", "--case", "D4_34", "--p", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corrupted_golden_file_is_an_integrity_failure() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("truncated.json");
    fs::write(&truncated, "{\"schema\": 1, \"cases\": [").unwrap();
    let out = kneserlab(&["verify-fixtures", "--golden", truncated.to_str().unwrap()]);
    assert_eq!(code(&out), 4);

    // a syntactically valid file with a wrong witness vector
    let good = include_str!("../../core/fixtures/nonexamples.json");
    let tampered = dir.path().join("tampered.json");
    fs::write(&tampered, good.replacen("e3+e4+e7", "e3+e4", 1)).unwrap();
    let out = kneserlab(&["verify-fixtures", "--golden", tampered.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("B3_2"));

    let missing = dir.path().join("missing.json");
    let out = kneserlab(&["verify-fixtures", "--golden", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
}

#[test]
fn cross_validate_examples() {
    for (family, rank, types) in [("A", "3", "2"), ("A", "2", "1,2"), ("D", "4", "2")] {
        let out = kneserlab(&["cross-validate", "--family", family, "--rank", rank, "--type", types, "--p", "2"]);
        assert_eq!(code(&out), 0, "{family}_{rank} {types}");
    }
    let out = kneserlab(&["cross-validate", "--family", "A", "--rank", "5", "--type", "1"]);
    assert_eq!(code(&out), 2);
    let out = kneserlab(&["cross-validate", "--grid"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["mismatches"], 0);
}

#[test]
fn export_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sigma.dimacs");
    let out = kneserlab(&[
        "export", "--family", "A", "--rank", "4", "--type", "2", "--graph", "sigma", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "p edge 10 15"));

    let out = kneserlab(&["export", "--family", "A", "--rank", "3", "--type", "2", "--graph", "complement"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // 35 lines of PG(3,2), each meeting 18 others
    assert!(text.lines().any(|l| l == format!("p edge 35 {}", 35 * 18 / 2)));

    let out = kneserlab(&["export", "--family", "A", "--rank", "3", "--type", "2", "--format", "json"]);
    assert_eq!(stdout_json(&out)["graph"], "gamma");
}
