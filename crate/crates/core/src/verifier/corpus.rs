//! Corpora: every labeled graph up to a small order, or graph6 files.

use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::limits::limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("exhaustive generation needs 1 <= n <= {cap}, got {n}")]
    OrderOutOfRange { n: usize, cap: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph on `n` vertices whose edge set is `mask`, bit `b`
/// standing for the `b`-th vertex pair in graph6 order (`01, 02, 12, 03, ...`).
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            b += 1;
        }
    }
    Graph::from_masks_lossy(n, &adj)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, by increasing edge mask.
pub fn generate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    let cap = limits().exhaustive_max_n;
    if n == 0 || n > cap {
        return Err(CorpusError::OrderOutOfRange { n, cap });
    }
    Ok((0..1u64 << pairs(n)).map(move |mask| labeled_graph(n, mask)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Ingested {
    /// Parsed graphs with their 1-based line numbers.
    pub graphs: Vec<(usize, Graph)>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses graph6 lines; blank lines and a leading `>>graph6<<` marker are
/// skipped, and bad lines become diagnostics.
pub fn parse_corpus(text: &str) -> Ingested {
    let mut out = Ingested::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_start_matches(">>graph6<<");
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => out.graphs.push((i + 1, g)),
            Err(e) => out.diagnostics.push(Diagnostic {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    out
}

pub fn ingest_corpus(path: impl AsRef<Path>) -> Result<Ingested, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_corpus(&text))
}

/// An indexable list of graphs, so that workers can split it by position.
#[derive(Debug, Clone)]
pub enum Corpus {
    /// Every labeled graph of order `1..=max_n`, smaller orders first.
    Exhaustive {
        max_n: usize,
        offsets: Vec<u64>,
    },
    Graphs(Vec<Graph>),
}

impl Corpus {
    pub fn exhaustive(max_n: usize) -> Result<Corpus, CorpusError> {
        let cap = limits().exhaustive_max_n;
        if max_n == 0 || max_n > cap {
            return Err(CorpusError::OrderOutOfRange { n: max_n, cap });
        }
        let mut offsets = vec![0u64];
        for n in 1..=max_n {
            offsets.push(offsets[n - 1] + (1u64 << pairs(n)));
        }
        Ok(Corpus::Exhaustive { max_n, offsets })
    }

    pub fn len(&self) -> u64 {
        match self {
            Corpus::Exhaustive { offsets, .. } => *offsets.last().unwrap(),
            Corpus::Graphs(gs) => gs.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: u64) -> Graph {
        match self {
            Corpus::Exhaustive { offsets, .. } => {
                let n = offsets.partition_point(|&o| o <= index);
                labeled_graph(n, index - offsets[n - 1])
            }
            Corpus::Graphs(gs) => gs[index as usize].clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Corpus::Exhaustive { max_n, .. } => format!("exhaustive n<={max_n}"),
            Corpus::Graphs(gs) => format!("{} graphs", gs.len()),
        }
    }
}
