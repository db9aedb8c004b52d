use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const PETERSEN: &str = "IheA@GUAo";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamforbid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn invariants_of_k4() {
    let o = run(&["invariants", "--graph6", "C~", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("config: command=invariants"), "{out}");
    assert!(out.contains("seed=0"));
    assert!(
        out.lines()
            .any(|l| l.starts_with("kappa") && l.ends_with('3')),
        "{out}"
    );
    assert!(
        out.lines()
            .any(|l| l.starts_with("toughness") && l.ends_with("inf")),
        "{out}"
    );
}

#[test]
fn invariants_json_echoes_seed() {
    let o = run(&[
        "invariants",
        "--graph6",
        PETERSEN,
        "--k",
        "3",
        "--json",
        "--seed",
        "41",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 41);
    assert!(v["config"].as_str().unwrap().contains("seed=41"));
    let inv = &v["results"][0]["invariants"];
    assert_eq!(inv["kappa"], 3);
    assert_eq!(inv["toughness"], serde_json::json!({"num": 4, "den": 3}));
}

#[test]
fn exhaustive_verify_is_clean() {
    let o = run(&[
        "verify",
        "--exhaustive-n",
        "6",
        "--k",
        "2",
        "--jobs",
        "2",
        "--json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["filtered"], v["hamiltonian_count"]);
    assert_eq!(v["corpus_size"], 2 + 8 + 64 + 1024 + 32768 + 1);
}

#[test]
fn petersen_is_the_exception() {
    let o = run(&["verify", "--graph6", PETERSEN, "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("petersen_exception IheA@GUAo"));
}

#[test]
fn replay_ends_in_the_exception() {
    let o = run(&["replay", "--graph6", PETERSEN, "--k", "3"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert_eq!(
        out.trim_end().lines().last(),
        Some("petersen_exception"),
        "{out}"
    );
    assert!(out.contains("t = 0"));
}

#[test]
fn replay_json_is_stable() {
    let a = run(&["replay", "--graph6", PETERSEN, "--k", "3", "--json"]);
    let b = run(&["replay", "--graph6", PETERSEN, "--k", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["results"][0]["verdict"], "petersen_exception");
}

#[test]
fn replay_rejects_hamiltonian_input() {
    let o = run(&["replay", "--graph6", "C~", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run(&["verify", "--k", "2"]).status.code(), Some(1));
    assert_eq!(run(&["invariants"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "verify",
            "--exhaustive-n",
            "4",
            "--k",
            "2",
            "--hypothesis",
            "nope"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&["invariants", "--graph6", "C~!"]).status.code(),
        Some(1)
    );
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("replay"));
}

#[test]
fn oversized_exhaustive_corpus_is_refused() {
    let o = run(&["verify", "--exhaustive-n", "30", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn encode_decode_round_trip() {
    let o = run(&["encode", "--n", "5", "--edges", "0-1,1-2,2-3,3-4,4-0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o).trim().to_string();
    let d = run(&["decode", "--graph6", &text]);
    assert_eq!(stdout(&d).trim(), "n=5 edges=0-1,1-2,2-3,0-4,3-4");
    assert_eq!(
        run(&["encode", "--n", "3", "--edges", "0-7"]).status.code(),
        Some(1)
    );
}

#[test]
fn file_input() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, ">>graph6<<C~\n\n{PETERSEN}\nDhc").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["verify", "--file", path, "--k", "2", "--json"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["corpus_size"], 3);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "C~\n???bad").unwrap();
    let o = run(&["decode", "--file", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
}

#[test]
fn lemma_trials_pass() {
    let o = run(&["lemmas", "--trials", "50", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("seed=5"));
}
