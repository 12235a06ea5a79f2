use std::path::Path;
use std::process::{Command, Output};

use hfree::graph::iso::are_isomorphic;
use hfree::graph::named::{cycle, path, t_diamond};
use hfree::Graph;
use serde_json::Value;
use tempfile::TempDir;

fn hfree(args: &[&str]) -> Output {
    hfree_env(args, &[])
}

fn hfree_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hfree"));
    cmd.args(args).env_remove("HFREE_BRUTE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.ends_with('\n'), "output is newline-terminated");
    serde_json::from_str(&text).unwrap()
}

fn graph_of(v: &Value) -> Graph {
    serde_json::from_value(v.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn read_json(p: &str) -> Value {
    let text = std::fs::read_to_string(Path::new(p)).unwrap();
    assert!(text.ends_with('\n'));
    serde_json::from_str(&text).unwrap()
}

const P3_DELETION: &str = r#"{"graph":"Bw","k":1,"h":"Bg","kind":"deletion"}"#;

#[test]
fn classify_single_edge_editing_is_polynomial() {
    let out = hfree(&["classify", "--graph", "K2", "--kind", "editing"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verdict"], "Polynomial");
    assert_eq!(v["reason"], "at_most_two_vertices");
    assert!(v["version"].is_string());
}

#[test]
fn classify_diamond_deletion_ends_at_diamond_base() {
    let out = hfree(&["classify", "--graph", "diamond", "--kind", "deletion"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verdict"], "NPComplete");
    assert_eq!(v["base"]["problem"], "Diamond-Deletion");
}

#[test]
fn classify_c7_completion_starts_with_complement() {
    let dir = TempDir::new().unwrap();
    // graph6 file input
    let file = write(&dir, "c7.g6", "FhCKG\n");
    let out = hfree(&["classify", "--input", &file, "--kind", "completion"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json_of(&out);
    assert!(are_isomorphic(&graph_of(&v["h"]), &cycle(7).unwrap()));
    assert_eq!(v["verdict"], "NPComplete");
    assert_eq!(v["chain"][0]["step"], "ComplementProblem");
}

#[test]
fn classify_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.g6", "!!not a graph\n");
    let out = hfree(&["classify", "--input", &file, "--kind", "deletion"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());
}

#[test]
fn churn_traces() {
    let out = hfree(&["churn", "--graph", "sunlet6", "--mode", "deletion"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
    assert!(are_isomorphic(
        &graph_of(&v["terminal"]),
        &cycle(6).unwrap()
    ));

    let v = json_of(&hfree(&["churn", "--graph", "K5", "--mode", "editing"]));
    assert!(v["steps"].as_array().unwrap().is_empty());
    assert_eq!(v["terminal_shape"], "regular");

    let v = json_of(&hfree(&["churn", "--graph", "P5", "--mode", "editing"]));
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
    assert!(are_isomorphic(&graph_of(&v["terminal"]), &path(3).unwrap()));
}

#[test]
fn churn_precondition_fails_with_exit_2() {
    let out = hfree(&["churn", "--graph", "K2", "--mode", "editing"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hfree(&["churn", "--graph", "K2", "--mode", "deletion"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_tdiamond_gives_three_diamond_instance() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "d.json",
        r#"{"graph":"C}","k":1,"h":"C}","kind":"deletion"}"#,
    );
    let out_path = path_str(&dir, "out.json");
    let out = hfree(&[
        "reduce", "--input", &input, "--step", "tdiamond", "--out", &out_path,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = read_json(&out_path);
    assert!(are_isomorphic(
        &graph_of(&v["instance"]["h"]),
        &t_diamond(3).unwrap()
    ));
    assert_eq!(v["instance"]["k"], 1);
    // 4 vertices plus a 2-clique for each of the 5 edges
    assert_eq!(v["instance"]["graph"]["n"], 14);
    assert_eq!(v["step"]["step"], "TDiamondInduction");
    assert_eq!(v["step"]["cliques"].as_array().unwrap().len(), 5);
}

#[test]
fn reduce_degree_into_p5() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p3.json", P3_DELETION);
    let v = json_of(&hfree(&[
        "reduce", "--input", &input, "--step", "degree", "--target", "P5",
    ]));
    assert!(are_isomorphic(
        &graph_of(&v["instance"]["h"]),
        &path(5).unwrap()
    ));
    assert_eq!(v["instance"]["kind"], "deletion");
    assert_eq!(v["step"]["params"]["d"], 1);
}

#[test]
fn complement_twice_restores_the_instance() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p3.json", P3_DELETION);
    let once = path_str(&dir, "once.json");
    let twice = path_str(&dir, "twice.json");
    let a = hfree(&[
        "reduce",
        "--input",
        &input,
        "--step",
        "complement",
        "--out",
        &once,
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(read_json(&once)["instance"]["kind"], "completion");
    let b = hfree(&[
        "reduce",
        "--input",
        &once,
        "--step",
        "complement",
        "--out",
        &twice,
    ]);
    assert_eq!(b.status.code(), Some(0));
    let original: hfree::Instance = serde_json::from_str(P3_DELETION).unwrap();
    let back: hfree::Instance =
        serde_json::from_value(read_json(&twice)["instance"].clone()).unwrap();
    assert_eq!(back.to_json(), original.to_json());
}

#[test]
fn reduced_instance_keeps_the_answer() {
    let dir = TempDir::new().unwrap();
    let cases = [
        // one deletion splits the path
        (r#"{"graph":"Bg","k":1,"h":"Bg","kind":"deletion"}"#, 0),
        // any single deletion leaves a P4
        (
            r#"{"graph":{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]},"k":1,"h":"Bg","kind":"deletion"}"#,
            1,
        ),
    ];
    for (i, (text, code)) in cases.into_iter().enumerate() {
        let input = write(&dir, &format!("in{i}.json"), text);
        let out_path = path_str(&dir, &format!("out{i}.json"));
        let r = hfree(&[
            "reduce", "--input", &input, "--step", "case1", "--target", "K2,3", "--out", &out_path,
        ]);
        assert_eq!(
            r.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&r.stderr)
        );
        assert_eq!(
            hfree(&["solve", "--input", &input]).status.code(),
            Some(code)
        );
        assert_eq!(
            hfree(&["solve", "--input", &out_path]).status.code(),
            Some(code)
        );
    }
}

#[test]
fn reduce_reports_failed_preconditions() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p3.json", P3_DELETION);
    let out = hfree(&["reduce", "--input", &input, "--step", "tdiamond"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tdiamond"));
    let out = hfree(&[
        "reduce", "--input", &input, "--step", "low-pair", "--target", "P5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_exit_codes() {
    let dir = TempDir::new().unwrap();
    let yes = write(
        &dir,
        "yes.json",
        r#"{"graph":"Bg","k":1,"h":"Bg","kind":"deletion"}"#,
    );
    let no = write(
        &dir,
        "no.json",
        r#"{"graph":{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]},"k":1,"h":"Bg","kind":"deletion"}"#,
    );
    let bad = write(&dir, "bad.json", "{ not json");
    for engine in ["branch", "brute"] {
        let out = hfree(&["solve", "--input", &yes, "--engine", engine]);
        assert_eq!(out.status.code(), Some(0));
        let v = json_of(&out);
        assert_eq!(v["result"]["answer"], "yes");
        assert_eq!(v["engine"], engine);
        let out = hfree(&["solve", "--input", &no, "--engine", engine]);
        assert_eq!(out.status.code(), Some(1));
        assert_eq!(json_of(&out)["result"]["answer"], "no");
        assert_eq!(
            hfree(&["solve", "--input", &bad, "--engine", engine])
                .status
                .code(),
            Some(2)
        );
    }
}

#[test]
fn brute_cap_from_environment() {
    let dir = TempDir::new().unwrap();
    let no = write(
        &dir,
        "no.json",
        r#"{"graph":{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]},"k":1,"h":"Bg","kind":"deletion"}"#,
    );
    let out = hfree_env(
        &["solve", "--input", &no, "--engine", "brute"],
        &[("HFREE_BRUTE_CAP", "3")],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn verify_named_suites_pass() {
    let dir = TempDir::new().unwrap();
    for (args, suite) in [
        (
            vec!["verify", "lemma2", "--host-cap", "4", "--k-cap", "2"],
            "equivalence",
        ),
        (vec!["verify", "churn", "--n-cap", "6"], "churn"),
        (vec!["verify", "prop1", "--host-cap", "5"], "equivalence"),
    ] {
        let out_path = path_str(&dir, "report.json");
        let mut args = args.clone();
        args.extend(["--out", out_path.as_str(), "--seed", "7"]);
        let out = hfree(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = read_json(&out_path);
        assert_eq!(v["failures"], 0);
        assert_eq!(v["config"]["seed"], 7);
        assert!(v["version"].is_string());
        assert_eq!(v["suites"][0]["suite"], suite);
    }
}

#[test]
fn verify_report_ignores_worker_count() {
    let run = |workers: &str| {
        let out = hfree(&[
            "verify",
            "tdiamond",
            "--host-cap",
            "5",
            "--workers",
            workers,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let mut v = json_of(&out);
        assert_eq!(v["workers"], workers.parse::<u64>().unwrap());
        v.as_object_mut().unwrap().remove("workers");
        v
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_eq!(hfree(&["verify", "lemma99"]).status.code(), Some(2));
    assert_eq!(
        hfree(&["verify", "degree", "--host-cap", "0"])
            .status
            .code(),
        Some(2)
    );
}
