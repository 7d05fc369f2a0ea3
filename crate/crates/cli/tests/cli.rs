use std::path::PathBuf;
use std::process::Command;

use anick_cli::{run, Results, RunReport};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn anick(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_anick")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn resolve_prints_degree_three_differentials() {
    let (out, _, code) = anick(&["resolve", &fixture("example.json"), "--degree", "3"]);
    assert_eq!(code, 0);
    for line in [
        "d3(xxyxxyx) = [xxyx | xyx]",
        "d3(xxyxxx) = [xxyx | xx] - [xxyx | x]",
        "d3(xxxyx) = [xxx | yx] + [xxyx | 1]",
        "d3(xxyxz) = [xxyx | z] - [xxyx | 1]",
        "d3(xxxx) = [xxx | x]",
    ] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
    assert_eq!(out.lines().filter(|l| l.starts_with("d3(")).count(), 5);
}

#[test]
fn chains_degree_four() {
    let (out, _, code) = anick(&["chains", &fixture("example.json"), "--degree", "4"]);
    assert_eq!(code, 0);
    let words: Vec<&str> = out.lines().collect();
    assert_eq!(words.len(), 10);
    assert_eq!(words[0], "xxyxxyxxyx");
    assert_eq!(words[9], "xxxyxz");
}

#[test]
fn stdout_is_deterministic() {
    let file = fixture("example.json");
    for args in [
        vec!["resolve", file.as_str(), "--degree", "4"],
        vec!["chain-graph", file.as_str()],
        vec!["diagnose", file.as_str(), "--degree", "3", "--format", "json"],
    ] {
        let a = anick(&args);
        let b = anick(&args);
        assert_eq!(a.0, b.0);
        assert_eq!(a.2, b.2);
    }
}

#[test]
fn gb_check_reports_counterexample() {
    let (out, _, code) =
        anick(&["gb-check", &fixture("not_groebner.json"), "--max-degree", "5"]);
    assert_eq!(code, 2);
    assert!(out.contains("xyx"), "{out}");
}

#[test]
fn resolution_refuses_non_groebner_without_complete() {
    let (_, err, code) = anick(&["resolve", &fixture("not_groebner.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("xyx"));
    let (out, _, code) =
        anick(&["verify", &fixture("not_groebner.json"), "--complete", "--max-degree", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("complex verified"));
}

#[test]
fn completion_bound_exits_three() {
    let (_, err, code) = anick(&["gb-complete", &fixture("braid.json"), "--max-degree", "6"]);
    assert_eq!(code, 3);
    assert!(err.contains("bound"));
}

#[test]
fn bad_input_exits_four() {
    assert_eq!(anick(&["chains", &fixture("bad.json")]).2, 4);
    assert_eq!(anick(&["chains", "/definitely/not/here.json"]).2, 4);
    assert_eq!(anick(&["no-such-command"]).2, 4);
    assert_eq!(anick(&["chains", &fixture("example.json"), "--degree", "two"]).2, 4);
    assert_eq!(anick(&["chains", &fixture("example.json"), "--degree", "0"]).2, 4);
    assert_eq!(anick(&["--help"]).2, 0);
}

#[test]
fn json_report_round_trips() {
    let file = fixture("example.json");
    for args in [
        vec!["resolve", file.as_str(), "--degree", "3", "--format", "json"],
        vec!["gb-check", file.as_str(), "--format", "json"],
        vec!["chain-graph", file.as_str(), "--format", "json"],
        vec!["verify", file.as_str(), "--degree", "4", "--format", "json"],
    ] {
        let mut argv = vec!["anick"];
        argv.extend(&args);
        let out = run(argv);
        assert_eq!(out.code, 0);
        let report: RunReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.exit_code, 0);
        assert_eq!(report.command, args);
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, out.stdout);
    }
}

#[test]
fn json_differentials_match_text() {
    let file = fixture("example.json");
    let out = run(["anick", "resolve", &file, "--degree", "3", "--format", "json"]);
    let report: RunReport = serde_json::from_str(&out.stdout).unwrap();
    let Results::Resolve { differentials } = report.results else { panic!("wrong kind") };
    let d = differentials.iter().find(|d| d.chain == "xxxyx").unwrap();
    assert_eq!(d.text, "[xxx | yx] + [xxyx | 1]");
    assert_eq!(d.value.terms.len(), 2);
    assert_eq!(d.value.terms[0].chain, "xxx");
    assert_eq!(d.value.terms[0].tail, "yx");
    assert_eq!(d.value.terms[1].coeff, "1");
}

#[test]
fn digest_tracks_presentation() {
    let a = run(["anick", "obstructions", &fixture("example.json"), "--format", "json"]);
    let b = run(["anick", "obstructions", &fixture("idempotent.json"), "--format", "json"]);
    let ra: RunReport = serde_json::from_str(&a.stdout).unwrap();
    let rb: RunReport = serde_json::from_str(&b.stdout).unwrap();
    let (da, db) = (ra.presentation_sha256.unwrap(), rb.presentation_sha256.unwrap());
    assert_eq!(da.len(), 64);
    assert_ne!(da, db);
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let pruned = dir.path().join("g.dot");
    let full = dir.path().join("full.dot");
    let file = fixture("example.json");
    assert_eq!(anick(&["chain-graph", &file, "--dot", pruned.to_str().unwrap()]).2, 0);
    assert_eq!(
        anick(&["chain-graph", &file, "--dot", full.to_str().unwrap(), "--no-prune"]).2,
        0
    );
    let pruned = std::fs::read_to_string(pruned).unwrap();
    let full = std::fs::read_to_string(full).unwrap();
    assert!(pruned.starts_with("digraph chains {"));
    assert!(pruned.contains("label=\"xxyx\""));
    assert!(pruned.lines().count() <= full.lines().count());
}
