use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use hamforbid::graph6::{encode_graph6, parse_graph6};
use hamforbid::invariants::InvariantReport;
use hamforbid::surgery::{replay_proof, ReplayOutcome, SurgeryError};
use hamforbid::verifier::{
    graph_label, ingest_corpus, lemma_suite, verify, Corpus, Hypothesis, HypothesisKind,
    VerifyOptions,
};
use hamforbid::Graph;
use serde_json::{json, Value};

use crate::{
    Command, Common, DecodeArgs, EncodeArgs, Input, InvariantsArgs, LemmasArgs, ReplayArgs,
    VerifyArgs,
};

/// Whether the run found what it was checking for.
pub enum Status {
    Clean,
    Failed,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        match s {
            Status::Clean => ExitCode::SUCCESS,
            Status::Failed => ExitCode::from(2),
        }
    }
}

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Invariants(a) => invariants(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Replay(a) => replay(a),
        Command::Lemmas(a) => lemmas(a),
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a),
    }
}

fn config_line(command: &str, fields: &[(&str, String)], common: &Common) -> String {
    let mut line = format!("config: command={command}");
    for (k, v) in fields {
        line.push_str(&format!(" {k}={v}"));
    }
    line.push_str(&format!(" seed={}", common.seed));
    line
}

fn load(input: &Input) -> Result<Vec<Graph>> {
    if let Some(text) = &input.graph6 {
        return Ok(vec![
            parse_graph6(text).with_context(|| format!("invalid graph6 record {text:?}"))?
        ]);
    }
    let path = input.file.as_ref().expect("clap requires one input");
    let ingested = ingest_corpus(path)?;
    if let Some(d) = ingested.diagnostics.first() {
        bail!("{}:{}: {}", path.display(), d.line, d.message);
    }
    if ingested.graphs.is_empty() {
        bail!("{} holds no graphs", path.display());
    }
    Ok(ingested.graphs.into_iter().map(|(_, g)| g).collect())
}

fn input_label(input: &Input) -> String {
    match (&input.graph6, &input.file) {
        (Some(g), _) => format!("graph6:{g}"),
        (_, Some(p)) => format!("file:{}", p.display()),
        _ => unreachable!(),
    }
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn invariants(a: InvariantsArgs) -> Result<Status> {
    if a.k == 0 {
        bail!("--k must be at least 1");
    }
    let config = config_line(
        "invariants",
        &[("input", input_label(&a.input)), ("k", a.k.to_string())],
        &a.common,
    );
    let graphs = load(&a.input)?;
    let mut reports = Vec::new();
    for g in &graphs {
        reports.push((graph_label(g), InvariantReport::compute(g, a.k)?));
    }
    if a.common.json {
        let list: Vec<Value> = reports
            .iter()
            .map(|(g, r)| json!({"graph": g, "invariants": r}))
            .collect();
        print_json(&json!({"config": config, "seed": a.common.seed, "results": list}));
        return Ok(Status::Clean);
    }
    println!("{config}");
    for (g, r) in reports {
        println!();
        println!("{:<12}{g}", "graph");
        println!("{:<12}{}", "n", r.n);
        println!("{:<12}{}", "edges", r.edges);
        println!("{:<12}{}", "min degree", r.min_degree);
        println!("{:<12}{}", "kappa", r.kappa);
        println!("{:<12}{}", "toughness", r.toughness);
        println!("{:<12}{}", "alpha_e", r.alpha_e);
        for (k, free) in &r.freeness {
            println!("{:<12}{free}", format!("free@{k}"));
        }
        for (k, mu) in &r.mu {
            println!("{:<12}{mu}", format!("mu_{k}"));
        }
    }
    Ok(Status::Clean)
}

fn verify_cmd(a: VerifyArgs) -> Result<Status> {
    let kind: HypothesisKind = a.hypothesis.parse()?;
    let hypothesis = Hypothesis::new(kind, a.k)?;
    let (corpus, source) = match (&a.graph6, &a.file, a.exhaustive_n) {
        (_, _, Some(n)) => (Corpus::exhaustive(n)?, format!("exhaustive-n:{n}")),
        (g6, file, None) => {
            let input = Input {
                graph6: g6.clone(),
                file: file.clone(),
            };
            (Corpus::Graphs(load(&input)?), input_label(&input))
        }
    };
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let config = config_line(
        "verify",
        &[
            ("hypothesis", kind.id().to_string()),
            ("k", a.k.to_string()),
            ("corpus", source),
            ("jobs", jobs.to_string()),
            ("abort", (!a.no_abort).to_string()),
        ],
        &a.common,
    );
    let opts = VerifyOptions {
        jobs: Some(jobs),
        seed: a.common.seed,
        abort_on_counterexample: !a.no_abort,
    };
    let report = verify(&corpus, &hypothesis, opts)?;
    let status = if report.is_clean() {
        Status::Clean
    } else {
        Status::Failed
    };
    if a.common.json {
        let mut value = serde_json::to_value(&report)?;
        value["config"] = json!(config);
        print_json(&value);
        return Ok(status);
    }
    println!("{config}");
    println!("{:<26}{}", "hypothesis", report.hypothesis);
    println!("{:<26}{}", "corpus", report.corpus);
    println!("{:<26}{}", "corpus size", report.corpus_size);
    println!("{:<26}{}", "processed", report.processed);
    println!("{:<26}{}", "filtered", report.filtered);
    println!("{:<26}{}", "rejected", report.rejected);
    for (c, n) in &report.per_condition_rejects {
        println!("{:<26}{n}", format!("  failing {c}"));
    }
    println!("{:<26}{}", "hamiltonian", report.hamiltonian_count);
    println!("{:<26}{}", "petersen exceptions", report.exceptions.len());
    for g in &report.exceptions {
        println!("  petersen_exception {g}");
    }
    println!("{:<26}{}", "counterexamples", report.counterexamples.len());
    for g in &report.counterexamples {
        println!("  COUNTEREXAMPLE {g}");
    }
    println!("{:<26}{}", "runtime ms", report.runtime_ms);
    println!("{:<26}{}", "seed", report.seed);
    Ok(status)
}

fn replay(a: ReplayArgs) -> Result<Status> {
    let config = config_line(
        "replay",
        &[("input", input_label(&a.input)), ("k", a.k.to_string())],
        &a.common,
    );
    let graphs = load(&a.input)?;
    let mut status = Status::Clean;
    let mut results = Vec::new();
    if !a.common.json {
        println!("{config}");
    }
    for g in &graphs {
        let label = graph_label(g);
        let replayed = match replay_proof(g, a.k) {
            Ok(r) => r,
            Err(
                e @ (SurgeryError::HypothesisViolation(_)
                | SurgeryError::Resource(_)
                | SurgeryError::Invariant(_)),
            ) => {
                return Err(anyhow!("{label}: {e}"));
            }
            Err(e) => {
                status = Status::Failed;
                if a.common.json {
                    results.push(json!({"graph": label, "verdict": "COUNTEREXAMPLE", "error": e.to_string()}));
                } else {
                    println!("\n{label}\nCOUNTEREXAMPLE: {e}");
                }
                continue;
            }
        };
        let verdict = match &replayed.outcome {
            ReplayOutcome::Certificate(c) if c.petersen => "petersen_exception",
            _ => {
                status = Status::Failed;
                "COUNTEREXAMPLE"
            }
        };
        if a.common.json {
            results.push(json!({"graph": label, "replay": replayed, "verdict": verdict}));
            continue;
        }
        println!("\n{label}");
        for (i, step) in replayed.trace.iter().enumerate() {
            println!("{:>2}. {}", i + 1, step.claim);
            for f in &step.facts {
                println!("      {f}");
            }
            for w in &step.witnesses {
                println!("      {}: {:?}", w.label, w.vertices);
            }
        }
        if let ReplayOutcome::Certificate(c) = &replayed.outcome {
            println!(
                "certificate: t = {}, (k, m) = ({}, {}), {} recorded facts",
                c.t,
                c.k,
                c.m,
                c.facts.len()
            );
        }
        println!("{verdict}");
    }
    if a.common.json {
        print_json(&json!({"config": config, "seed": a.common.seed, "k": a.k, "results": results}));
    }
    Ok(status)
}

fn lemmas(a: LemmasArgs) -> Result<Status> {
    if a.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let config = config_line("lemmas", &[("trials", a.trials.to_string())], &a.common);
    let report = lemma_suite(a.trials, a.common.seed);
    let status = if report.all_passed() {
        Status::Clean
    } else {
        Status::Failed
    };
    if a.common.json {
        let mut value = serde_json::to_value(&report)?;
        value["config"] = json!(config);
        print_json(&value);
        return Ok(status);
    }
    println!("{config}");
    println!(
        "{:<26}{:>9}{:>9}{:>9}  result",
        "statement", "attempts", "trials", "passed"
    );
    for t in &report.lemmas {
        let result = if t.vacuous {
            "vacuous"
        } else if t.all_passed() {
            "pass"
        } else {
            "FAIL"
        };
        println!(
            "{:<26}{:>9}{:>9}{:>9}  {result}",
            t.name, t.attempts, t.trials, t.passed
        );
        for f in &t.failures {
            println!("    {f}");
        }
    }
    Ok(status)
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| anyhow!("edge {pair:?} is not of the form u-v"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

fn encode(a: EncodeArgs) -> Result<Status> {
    let g = Graph::from_edges(a.n, parse_edges(&a.edges)?)?;
    let text = encode_graph6(&g)?;
    if a.common.json {
        print_json(&json!({"graph6": text, "n": a.n, "edges": g.edges(), "seed": a.common.seed}));
    } else {
        println!("{text}");
    }
    Ok(Status::Clean)
}

fn decode(a: DecodeArgs) -> Result<Status> {
    let graphs = load(&a.input)?;
    if a.common.json {
        let list: Vec<Value> = graphs
            .iter()
            .map(|g| json!({"graph6": graph_label(g), "n": g.n(), "edges": g.edges()}))
            .collect();
        print_json(&json!({"graphs": list, "seed": a.common.seed}));
        return Ok(Status::Clean);
    }
    for g in &graphs {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        println!("n={} edges={}", g.n(), edges.join(","));
    }
    Ok(Status::Clean)
}
