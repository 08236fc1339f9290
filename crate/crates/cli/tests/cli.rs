use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use genuslab_cli::corpus_run::RandomGrid;
use genuslab_cli::{canonical_json, corpus_run, parse, parse_session, run, to_csv, CorpusConfig, RunOptions, Verdict};
use serde_json::Value;

fn sessions() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let mut v: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "gl"))
        .collect();
    v.sort();
    v
}

fn session(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions").join(name)).unwrap()
}

fn quiet() -> RunOptions {
    RunOptions {
        timings: false,
        ..RunOptions::default()
    }
}

#[test]
fn shipped_sessions_round_trip() {
    let files = sessions();
    assert!(files.len() >= 5);
    for f in files {
        let text = fs::read_to_string(&f).unwrap();
        let s = parse_session(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        let again = parse(&s.to_string()).unwrap();
        assert_eq!(s, again, "{}", f.display());
        assert_eq!(again.to_string(), s.to_string());
    }
}

#[test]
fn example_session_report() {
    let s = parse_session(&session("example44_2_1.gl")).unwrap();
    let doc = run(&s, &quiet()).unwrap();
    assert_eq!(doc.reports.len(), 2);
    let inv = &doc.reports[0];
    assert_eq!(inv.dim, Some(3));
    assert_eq!(inv.depth, Some(2));
    assert_eq!(inv.length, Some(3));
    assert_eq!(inv.e[..2], [2, -1]);
    assert_eq!(inv.sectional_genus, Some(0));
    assert_eq!(inv.hdeg, Some(3));
    assert_eq!(inv.torsions[0], 1);
    let thm = &doc.reports[1];
    assert_eq!(thm.verdict, Verdict::Holds);
    assert_eq!(thm.details["equality"], Value::from("holds"));
    assert_eq!(doc.status.exit_code(), 0);
}

#[test]
fn reports_are_byte_identical_and_match_the_golden_file() {
    let s = parse_session(&session("example44_2_1.gl")).unwrap();
    let a = canonical_json(&run(&s, &quiet()).unwrap());
    let b = canonical_json(&run(&s, &quiet()).unwrap());
    assert_eq!(a, b);
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/example44_2_1.json");
    if std::env::var_os("GENUSLAB_BLESS").is_some() {
        fs::write(&golden, &a).unwrap();
    }
    assert_eq!(a, fs::read_to_string(golden).unwrap());
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], Value::from(1));
    assert_eq!(v["reports"][1]["command_index"], Value::from(1));
    assert_eq!(v["reports"][1]["instance"], Value::from("A/Q"));
}

#[test]
fn capped_table_reports_no_stabilization() {
    let s = parse_session(&session("example44_2_1.gl")).unwrap();
    let opts = RunOptions {
        max_n: Some(1),
        ..quiet()
    };
    let doc = run(&s, &opts).unwrap();
    for r in &doc.reports {
        let e = r.error.as_ref().expect("structured error");
        assert_eq!(e.kind, "NoStabilization");
        assert_eq!(r.verdict, Verdict::Error);
    }
    assert_eq!(doc.status.exit_code(), 3);
}

#[test]
fn csv_is_a_numeric_projection() {
    let s = parse_session(&session("example44_2_1.gl")).unwrap();
    let csv = to_csv(&run(&s, &quiet()).unwrap().reports);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("command_index,instance,dim,depth,length,e0"));
    assert!(lines[1].starts_with("0,A/Q,3,2,3,2,-1"));
}

#[test]
fn engine_errors_carry_context() {
    let text = "ring R = vars x y\nalgebra A = R\nsequence Q = x\ncompute invariants A Q\n";
    let doc = run(&parse_session(text).unwrap(), &quiet()).unwrap();
    let r = &doc.reports[0];
    assert_eq!(r.command_index, 0);
    assert_eq!(r.instance, "A/Q");
    assert_eq!(r.error.as_ref().unwrap().kind, "InfiniteLength");
}

#[test]
fn empty_corpus_config_gives_empty_aggregate() {
    let agg = corpus_run(&CorpusConfig::from_json("{}").unwrap(), false);
    assert_eq!(agg.instances, 0);
    assert!(agg.properties.is_empty());
    assert!(agg.all_pass());
}

#[test]
fn injected_golden_value_flags_exactly_that_instance() {
    let cfg = CorpusConfig::from_json(
        r#"{"example44": [[2, 1]], "example42": [2], "prop41": true,
            "random": {"count": 3},
            "golden": {"example44-l2-m1-p32003": {"hdeg": 4}}}"#,
    )
    .unwrap();
    let agg = corpus_run(&cfg, false);
    assert_eq!(agg.instances, 6);
    assert_eq!(agg.failing, vec!["example44-l2-m1-p32003".to_string()]);
    assert_eq!(agg.counterexamples.len(), 1);
    assert_eq!(agg.counterexamples[0].check, "expected hdeg");
    assert!(agg.unmatched_golden.is_empty());
}

#[test]
fn corpus_runs_merge_deterministically() {
    let cfg = CorpusConfig {
        example42: vec![1, 2],
        random: RandomGrid {
            count: 6,
            ..RandomGrid::default()
        },
        ..CorpusConfig::default()
    };
    let a = canonical_json(&corpus_run(&cfg, false));
    let b = canonical_json(&corpus_run(&cfg, false));
    assert_eq!(a, b);
    let agg = corpus_run(&cfg, false);
    assert!(agg.all_pass(), "{:?}", agg.counterexamples);
    let ids: Vec<&str> = agg.summaries.iter().map(|s| s.instance.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_genuslab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn temp_session(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("genuslab-{}-{name}.gl", std::process::id()));
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn exit_codes() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let ok = dir.join("example44_2_1.gl");
    let (code, out) = binary(&["run", ok.to_str().unwrap(), "--no-timings"]);
    assert_eq!(code, 0);
    let golden = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/example44_2_1.json")).unwrap();
    assert_eq!(out, golden);
    let (code, _) = binary(&["run", ok.to_str().unwrap(), "--no-timings", "--max-n", "1"]);
    assert_eq!(code, 3);
    let bad = temp_session("bad", "ring R = vars x\nideal I = x +\n");
    assert_eq!(binary(&["run", bad.to_str().unwrap()]).0, 2);
    let failing = temp_session(
        "failing",
        "ring R = vars x y\nideal I = x^2, x*y^2\nalgebra A = R / I\nsequence Q = y\ncheck prop38 A Q\n",
    );
    assert_eq!(binary(&["run", failing.to_str().unwrap()]).0, 1);
    assert_eq!(binary(&["run"]).0, 2);
    let (code, printed) = binary(&["print", ok.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(parse(&printed).unwrap(), parse(&fs::read_to_string(&ok).unwrap()).unwrap());
    fs::remove_file(bad).ok();
    fs::remove_file(failing).ok();
}

#[test]
fn seed_comes_from_the_environment() {
    let ok = Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions/example44_2_1.gl");
    let out = Command::new(env!("CARGO_BIN_EXE_genuslab"))
        .args(["run", ok.to_str().unwrap(), "--no-timings"])
        .env("GENUSLAB_SEED", "9")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], Value::from(9));
}
