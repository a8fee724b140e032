use std::path::PathBuf;
use std::process::Command;

use topolab::cli;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("topolab").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_fixture() {
    let r = run(&["validate", &fixture("example-1.8.json")]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("4 points"));
}

#[test]
fn classify_set_outside_g_closed_list() {
    let r = run(&["classify-set", &fixture("example-1.8.json"), "--set", "k,m", "--class", "g-closed"]);
    assert_eq!((r.code, r.out.as_str()), (0, "false\n"));
}

#[test]
fn classify_set_empty_literal_and_json() {
    let r = run(&["classify-set", &fixture("example-1.8.json"), "--set", "", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(v["closed"], true);
    assert_eq!(v["open"], true);
    assert_eq!(v["scstar-closed"], true);
}

#[test]
fn implication_prints_counterexample() {
    let r = run(&["implication", "--from", "weakly-regular", "--to", "regular", "--points", "3"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("counterexample"));
    assert!(r.out.contains("\"kind\":\"space\""));
}

#[test]
fn implication_verified_exits_zero() {
    let r = run(&["implication", "--from", "regular", "--to", "scstar-regular", "--points", "3"]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
}

#[test]
fn malformed_documents_give_one_line_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"points":["a","b"],"opens":[[],["a"]]}"#, "{a,b} is missing"),
        (r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]}"#, "{a} ∪ {b}"),
        (r#"{"points":["a","a"],"opens":[[],["a"]]}"#, "duplicate point label `a`"),
        (r#"{"points":["a"],"opens":[[],["z"],["a"]]}"#, "unknown point label `z`"),
        (r#"{"points":["a"],"opens":[[]"#, "malformed document"),
    ];
    for (i, (body, needle)) in cases.iter().enumerate() {
        let path = write_temp(&dir, &format!("bad{i}.json"), body);
        let r = run(&["validate", &path]);
        assert_eq!(r.code, 2, "{body}");
        assert_eq!(r.err.lines().count(), 1, "{}", r.err);
        assert!(r.err.contains(needle), "{} lacks {needle}", r.err);
        assert!(r.out.is_empty());
    }
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["verify", "--theorem", "X9.9"],
        vec!["implication", "--from", "regular", "--to", "continuous", "--points", "3"],
        vec!["implication", "--from", "nonsense", "--to", "regular", "--points", "3"],
        vec!["enumerate", "--points", "9"],
        vec!["no-such-command"],
    ] {
        let r = run(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert_eq!(r.err.lines().count(), 1, "{args:?}: {}", r.err);
    }
}

#[test]
fn enumerate_counts() {
    for (n, homeo, count) in [(3, false, "29"), (4, false, "355"), (4, true, "33")] {
        let n = n.to_string();
        let mut args = vec!["enumerate", "--points", n.as_str(), "--count-only"];
        if homeo {
            args.push("--up-to-homeo");
        }
        let r = run(&args);
        assert_eq!((r.code, r.out.trim()), (0, count));
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--theorem", "T2.13", "--points", "3"]).code, 0);
    let r = run(&["verify", "--theorem", "R1.4", "--points", "2", "--format", "json"]);
    assert_eq!(r.code, 1);
    let v: serde_json::Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(v["verdict"], "counterexample");
    assert!(v.get("seconds").is_none());
}

#[test]
fn check_map_resolves_file_references() {
    let r = run(&["check-map", &fixture("sierpinski-map.json"), "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(r.out.trim()).unwrap();
    assert!(v["continuous"].is_boolean());
    assert!(v["scstar-irresolute"].is_boolean());
}

#[test]
fn classify_space_json() {
    let r = run(&["classify-space", &fixture("example-2.9.json"), "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(v["regular"], true);
    assert_eq!(v["strongly-rg-regular"], false);
}

#[test]
fn paper_report_is_stable() {
    let a = run(&["paper-report", "--format", "json"]);
    let b = run(&["paper-report", "--format", "json"]);
    assert_eq!(a.out, b.out);
    let disagree = a.out.lines().filter(|l| l.contains("DISAGREE")).count();
    assert_eq!(a.code, if disagree > 0 { 1 } else { 0 });
    for line in a.out.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_topolab");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["validate", &fixture("example-2.8.json")]), Some(0));
    assert_eq!(code(&["validate", "/nonexistent/space.json"]), Some(2));
    assert_eq!(code(&["verify", "--theorem", "R1.4", "--points", "2"]), Some(1));
}
