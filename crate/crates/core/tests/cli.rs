use std::process::Command;

use hstrict_crystal::cli::run;
use serde_json::Value;

fn hstrict(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hstrict").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn stats_for_the_worked_example() {
    let (code, out, _) = hstrict(&["stats", "--h", "5", "--partition", "16,11,10,10,9,5,1"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["eps"][0], 3);
    assert_eq!(v["phi"][0], 0);
    assert_eq!(v["signatures"]["0"]["signature"], "-,-,+,+,-,-,-");
    assert_eq!(v["signatures"]["0"]["reduced"], "-,-,-");
    assert_eq!(v["b"], 4);
    assert_eq!(v["restricted"], true);
}

#[test]
fn stats_accepts_bracketed_partitions() {
    let (code, out, _) = hstrict(&["stats", "--h", "3", "--partition", "[2,1]"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["type_W"], "M");
    assert_eq!(v["type_S"], "Q");
    assert_eq!(v["block_size"], 1);
}

#[test]
fn enumerate_degree_zero() {
    let (code, out, _) = hstrict(&["enumerate", "--h", "3", "--n", "0"]);
    assert_eq!((code, out.as_str()), (0, "[]\n"));
}

#[test]
fn enumerate_all_includes_unrestricted() {
    let (_, restricted, _) = hstrict(&["enumerate", "--h", "3", "--n", "6"]);
    let (_, all, _) = hstrict(&["enumerate", "--h", "3", "--n", "6", "--all"]);
    assert_eq!(restricted, "[3,2,1]\n[4,2]\n");
    assert!(all.lines().count() > restricted.lines().count());
    assert!(all.lines().any(|l| l == "[6]"));
    assert!(all.lines().any(|l| l == "[3,3]"));
}

#[test]
fn graph_exports_match_snapshots() {
    let (code, out, _) = hstrict(&["graph", "--h", "3", "--max-n", "4", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/h3_n4.json"));
    let (_, dot, _) = hstrict(&["graph", "--h", "3", "--max-n", "4", "--format", "dot"]);
    assert_eq!(dot, include_str!("golden/h3_n4.dot"));
}

#[test]
fn graph_to_degree_ten_has_the_expected_layers() {
    let (_, out, _) = hstrict(&["graph", "--h", "3", "--max-n", "10"]);
    let v = json(&out);
    let mut sizes = [0usize; 11];
    for node in v["nodes"].as_array().unwrap() {
        sizes[node["degree"].as_u64().unwrap() as usize] += 1;
    }
    assert_eq!(sizes, [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4]);
    assert_eq!(v["edges"].as_array().unwrap().len(), 22);
}

#[test]
fn graph_writes_to_a_file() {
    let path = std::env::temp_dir().join(format!("hstrict-graph-{}.dot", std::process::id()));
    let (code, out, _) = hstrict(&[
        "graph",
        "--h",
        "inf",
        "--max-n",
        "3",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("digraph crystal {"));
    assert!(text.contains("\"[2]\" -> \"[3]\" [label=2];"));
}

#[test]
fn branch_report() {
    let (code, out, _) = hstrict(&[
        "branch",
        "--h",
        "3",
        "--partition",
        "2,1",
        "--algebra",
        "W",
        "--direction",
        "res",
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["algebra"], "W");
    assert_eq!(v["direction"], "res");
    assert_eq!(v["pieces"][0]["socle"], serde_json::json!([2]));
    assert_eq!(v["completely_reducible"], true);
}

#[test]
fn jantzen_seitz_and_spin() {
    let (_, out, _) = hstrict(&["js", "--h", "3", "--partition", "3,1", "--group", "S"]);
    assert_eq!(json(&out)["jantzen_seitz"], false);
    let (_, out, _) = hstrict(&["js", "--h", "3", "--partition", "2,1", "--group", "S"]);
    assert_eq!(json(&out)["jantzen_seitz"], true);
    let (_, out, _) = hstrict(&["spin", "--h", "5", "--n", "10"]);
    let v = json(&out);
    assert_eq!(v["omega"], serde_json::json!([5, 4, 1]));
    assert_eq!(
        (v["dim_W"].as_u64(), v["dim_S"].as_u64()),
        (Some(512), Some(16))
    );
}

#[test]
fn checks_pass() {
    let (code, out, _) = hstrict(&["check", "--suite", "all", "--h", "3", "--max-n", "10"]);
    assert_eq!(code, 0, "{out}");
    for suite in ["axioms", "kac", "cores", "fixtures"] {
        assert!(out.contains(&format!("{suite}: ok")), "{out}");
    }
    let (code, out, _) = hstrict(&["check", "--h", "inf", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("kac: skipped"));
}

#[test]
fn bad_input_exits_with_two() {
    let (code, _, err) = hstrict(&["stats", "--h", "4", "--partition", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("odd integer"));
    let (code, _, err) = hstrict(&["stats", "--h", "3", "--partition", "2,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not 3-strict"));
    let (code, _, _) = hstrict(&[
        "branch",
        "--h",
        "5",
        "--partition",
        "6",
        "--algebra",
        "S",
        "--direction",
        "ind",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = hstrict(&["stats", "--h", "3", "--partition", "1,x"]);
    assert_eq!(code, 2);
    let (code, _, _) = hstrict(&["check", "--suite", "kac", "--h", "inf"]);
    assert_eq!(code, 2);
    let (code, _, _) = hstrict(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = hstrict(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hstrict");
    let ok = Command::new(bin)
        .args(["enumerate", "--h", "5", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "[2,1]\n[3]\n");
    let bad = Command::new(bin)
        .args(["js", "--h", "5", "--partition", "7", "--group", "A"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
