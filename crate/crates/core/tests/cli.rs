use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sandwich(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sandwich"))
        .args(args)
        .env_remove("SANDWICH_BUDGET_NODES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn status_prints_thirty_rows() {
    let out = sandwich(&["status"], None);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.ends_with("total 30: 15 P, 7 NPC, 8 open\n"));
    let rows: Vec<Value> = serde_json::from_str(&stdout(&sandwich(&["status", "--json"], None))).unwrap();
    assert_eq!(rows.len(), 30);
}

#[test]
fn solve_exit_codes_follow_verdicts() {
    let feasible = "p sandwich 4\nm 0 1\nm 1 2\nm 2 3\no 0 3\n";
    let infeasible = "p sandwich 4\nm 0 1\nm 1 2\nm 2 3\n";
    for (text, want, verdict) in [(feasible, 0, "feasible"), (infeasible, 1, "infeasible")] {
        let out = sandwich(&["solve", "--family", "P4,paw"], Some(text));
        assert_eq!(code(&out), want);
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["verdict"], verdict);
        assert_eq!(report["witness"].is_null(), want == 1);
        assert!(report.get("elapsed_ms").is_none());
    }
    let out = sandwich(&["solve", "--family", "C4,K4", "--mode", "poly"], Some(feasible));
    assert_eq!(code(&out), 2);
    let open: String = std::iter::once("p sandwich 7\n".to_string())
        .chain((0..7).flat_map(|u| (u + 1..7).map(move |v| format!("o {u} {v}\n"))))
        .collect();
    let out = sandwich(&["solve", "--family", "C4,K4", "--mode", "exact", "--budget-nodes", "1"], Some(&open));
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("budget"));
    let out = sandwich(&["solve", "--family", "C4,K4", "--timings"], Some(feasible));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["elapsed_ms"].is_number());
}

#[test]
fn usage_and_data_errors_exceed_two() {
    assert_eq!(code(&sandwich(&["frobnicate"], None)), 64);
    assert_eq!(code(&sandwich(&["solve", "--family", "paw,C4", "--mode", "fast"], None)), 64);
    assert_eq!(code(&sandwich(&["solve", "--family", "paw,blob"], Some("p sandwich 1\n"))), 64);
    assert_eq!(code(&sandwich(&["solve", "--family", "paw,C4"], Some("p sandwich 2\nm 0 5\n"))), 65);
    assert_eq!(code(&sandwich(&["solve", "--family", "paw,C4", "--input", "/no/such/file"], None)), 66);
}

#[test]
fn gen_solve_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let report = dir.path().join("report.json");
    let args = ["gen", "--n", "9", "--mode", "planted", "--family", "P4,C4", "--seed", "5", "--output", path(&inst)];
    assert_eq!(code(&sandwich(&args, None)), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&inst).unwrap()).unwrap();
    assert_eq!(doc["meta"]["family"], "C4,P4");
    assert!(doc["meta"]["hidden"]["edges"].is_array());

    let again = sandwich(&args[..args.len() - 2], None);
    assert_eq!(stdout(&again), std::fs::read_to_string(&inst).unwrap());

    let out = sandwich(&["solve", "--input", path(&inst), "--output", path(&report)], None);
    assert_eq!(code(&out), 0);
    let out = sandwich(&["verify", "--family", "P4,C4", "--input", path(&inst), "--witness", path(&report)], None);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "true\n"));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":9,"edges":[]}"#).unwrap();
    let out = sandwich(&["verify", "--family", "P4,C4", "--input", path(&inst), "--witness", path(&bad)], None);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn reduce_then_solve_wrapped_instance() {
    let formula = "p oneinthree 3 1\n1 2 3 0\n";
    let out = sandwich(&["reduce", "one-in-three"], Some(formula));
    assert_eq!(code(&out), 0);
    let reduced = stdout(&out);
    let solved = sandwich(&["solve"], Some(&reduced));
    assert_eq!(code(&solved), 0);
    let report: Value = serde_json::from_str(&stdout(&solved)).unwrap();
    assert_eq!(report["target"], "co-matched-bipartite");

    let wrapped = stdout(&sandwich(&["reduce", "wrap", "--gadget", "p4"], Some(&reduced)));
    let out = sandwich(&["solve", "--family", "paw,co-diamond", "--mode", "exact"], Some(&wrapped));
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["method"]["kind"], "exact");

    let src = stdout(&sandwich(&["reduce", "chain-source", "--n", "5", "--seed", "3", "--format", "text"], None));
    assert!(src.starts_with("p sandwich 5\n"));
    let wrapped = stdout(&sandwich(&["reduce", "wrap", "--gadget", "ch3"], Some(&src)));
    let out = sandwich(&["solve", "--family", "paw,co-C4", "--mode", "exact"], Some(&wrapped));
    assert!(matches!(code(&out), 0 | 1));

    let h = r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let k4 = stdout(&sandwich(&["reduce", "three-coloring"], Some(h)));
    assert_eq!(code(&sandwich(&["solve"], Some(&k4))), 1);
    let out = sandwich(&["reduce", "three-coloring", "--variant", "paw-co-k4", "--set-size", "2"], Some(h));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((doc["n"].as_u64(), doc["meta"]["guaranteed"].as_bool()), (Some(10), Some(false)));
}

#[test]
fn bench_reruns_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(
        &suite,
        r#"{"entries":[{"pair":["paw","C4"],"n_min":4,"n_max":7,"count":30,"seed":9},
                       {"pair":["K4","co-K4"],"n_min":4,"n_max":6,"count":10,"seed":1}]}"#,
    )
    .unwrap();
    let first = sandwich(&["bench", "--suite", path(&suite)], None);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), stdout(&sandwich(&["bench", "--suite", path(&suite)], None)));
    assert!(stdout(&first).starts_with("pair,status,instances,feasible,unknown,agree\n\"K4,co-K4\""));
    let rows: Vec<Value> = serde_json::from_str(&stdout(&sandwich(&["bench", "--suite", path(&suite), "--json"], None))).unwrap();
    assert_eq!(rows[1]["agree"], 30);
}
