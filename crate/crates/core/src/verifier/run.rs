//! Per-graph verdicts and parallel corpus verification.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::corpus::Corpus;
use super::hypothesis::{FilterResult, Hypothesis};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::hamiltonicity::{hamiltonian_cycle, is_petersen, OrientedCycle};
use crate::invariants::InvariantError;
use crate::limits::ResourceLimit;
use crate::surgery::{replay_proof, Replay, ReplayOutcome, SurgeryError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    #[serde(rename = "hamiltonian")]
    Hamiltonian,
    #[serde(rename = "petersen_exception")]
    PetersenException,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

impl Conclusion {
    pub fn label(self) -> &'static str {
        match self {
            Conclusion::Hamiltonian => "hamiltonian",
            Conclusion::PetersenException => "petersen_exception",
            Conclusion::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Cycle { cycle: OrientedCycle },
    Certificate { replay: Box<Replay> },
    Failure { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub graph: String,
    pub hypothesis: String,
    pub passes_filter: bool,
    pub filter: FilterResult,
    pub conclusion: Option<Conclusion>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error("graph {index} ({graph}): {message}")]
    AtGraph {
        index: u64,
        graph: String,
        message: String,
    },
    #[error("cannot start {jobs} workers: {message}")]
    Workers { jobs: usize, message: String },
}

pub fn graph_label(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<graph on {} vertices>", g.n()))
}

/// Filters one graph and, if it passes, decides it: a Hamiltonian cycle,
/// a replayed Petersen certificate, or a counterexample.
pub fn judge(g: &Graph, h: &Hypothesis) -> Result<Verdict, VerifyError> {
    let filter = h.filter(g)?;
    let mut verdict = Verdict {
        graph: graph_label(g),
        hypothesis: h.id(),
        passes_filter: filter.passes,
        filter,
        conclusion: None,
        witness: None,
    };
    if !verdict.passes_filter {
        return Ok(verdict);
    }
    let (conclusion, witness) = match hamiltonian_cycle(g)? {
        Some(cycle) => (Conclusion::Hamiltonian, Witness::Cycle { cycle }),
        None => decide_non_hamiltonian(g, h)?,
    };
    verdict.conclusion = Some(conclusion);
    verdict.witness = Some(witness);
    Ok(verdict)
}

fn decide_non_hamiltonian(g: &Graph, h: &Hypothesis) -> Result<(Conclusion, Witness), VerifyError> {
    let replay_k = if h.kind == super::HypothesisKind::MainTheorem {
        h.k
    } else if h.kind.allows_petersen() && is_petersen(g) {
        3
    } else {
        let reason = "filtered graph is not hamiltonian".to_string();
        return Ok((Conclusion::Counterexample, Witness::Failure { reason }));
    };
    match replay_proof(g, replay_k) {
        Ok(replay) => match &replay.outcome {
            ReplayOutcome::Certificate(cert) if cert.petersen => Ok((
                Conclusion::PetersenException,
                Witness::Certificate {
                    replay: Box::new(replay),
                },
            )),
            other => {
                let reason = format!("replay ended without a Petersen certificate: {other:?}");
                Ok((Conclusion::Counterexample, Witness::Failure { reason }))
            }
        },
        Err(SurgeryError::Resource(e)) => Err(e.into()),
        Err(SurgeryError::Invariant(e)) => Err(e.into()),
        Err(e) => Ok((
            Conclusion::Counterexample,
            Witness::Failure {
                reason: e.to_string(),
            },
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub seed: u64,
    pub abort_on_counterexample: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: None,
            seed: 0,
            abort_on_counterexample: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub hypothesis: String,
    pub corpus: String,
    pub corpus_size: u64,
    pub processed: u64,
    pub filtered: u64,
    pub rejected: u64,
    pub hamiltonian_count: u64,
    pub exceptions: Vec<String>,
    pub counterexamples: Vec<String>,
    pub per_condition_rejects: BTreeMap<String, u64>,
    pub aborted: bool,
    pub runtime_ms: u64,
    pub seed: u64,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && !self.aborted
    }
}

#[derive(Debug, Default)]
struct Tally {
    processed: u64,
    filtered: u64,
    hamiltonian: u64,
    rejects: BTreeMap<&'static str, u64>,
    exceptions: Vec<(u64, String)>,
    counterexamples: Vec<(u64, String)>,
    error: Option<(u64, String, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.processed += other.processed;
        self.filtered += other.filtered;
        self.hamiltonian += other.hamiltonian;
        for (k, v) in other.rejects {
            *self.rejects.entry(k).or_default() += v;
        }
        self.exceptions.extend(other.exceptions);
        self.counterexamples.extend(other.counterexamples);
        self.error = match (self.error, other.error) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn record(&mut self, index: u64, g: &Graph, h: &Hypothesis) -> bool {
        self.processed += 1;
        let verdict = match judge(g, h) {
            Ok(v) => v,
            Err(e) => {
                self.error = Some((index, graph_label(g), e.to_string()));
                return true;
            }
        };
        for c in verdict.filter.failed() {
            *self.rejects.entry(c.name()).or_default() += 1;
        }
        if !verdict.passes_filter {
            return false;
        }
        self.filtered += 1;
        match verdict.conclusion {
            Some(Conclusion::Hamiltonian) => self.hamiltonian += 1,
            Some(Conclusion::PetersenException) => self.exceptions.push((index, verdict.graph)),
            _ => {
                self.counterexamples.push((index, verdict.graph));
                return true;
            }
        }
        false
    }
}

/// Runs every graph of the corpus through [`judge`] on a pool of workers.
/// The counts and lists do not depend on the number of workers; lists are
/// in corpus order. A counterexample raises a shared stop flag when
/// `abort_on_counterexample` is set.
pub fn verify(corpus: &Corpus, h: &Hypothesis, opts: VerifyOptions) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let jobs = opts
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| VerifyError::Workers {
            jobs,
            message: e.to_string(),
        })?;
    let stop = AtomicBool::new(false);
    let tally = pool.install(|| {
        (0..corpus.len())
            .into_par_iter()
            .fold(Tally::default, |mut t, i| {
                if stop.load(Ordering::Relaxed) {
                    return t;
                }
                let g = corpus.get(i);
                let halt = t.record(i, &g, h);
                if halt && (t.error.is_some() || opts.abort_on_counterexample) {
                    stop.store(true, Ordering::Relaxed);
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    });
    if let Some((index, graph, message)) = tally.error {
        return Err(VerifyError::AtGraph {
            index,
            graph,
            message,
        });
    }
    let sorted = |mut v: Vec<(u64, String)>| {
        v.sort();
        v.into_iter().map(|(_, s)| s).collect::<Vec<_>>()
    };
    Ok(Report {
        hypothesis: h.id(),
        corpus: corpus.describe(),
        corpus_size: corpus.len(),
        processed: tally.processed,
        filtered: tally.filtered,
        rejected: tally.processed - tally.filtered,
        hamiltonian_count: tally.hamiltonian,
        exceptions: sorted(tally.exceptions),
        counterexamples: sorted(tally.counterexamples),
        per_condition_rejects: tally
            .rejects
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        aborted: stop.load(Ordering::Relaxed),
        runtime_ms: start.elapsed().as_millis() as u64,
        seed: opts.seed,
    })
}
