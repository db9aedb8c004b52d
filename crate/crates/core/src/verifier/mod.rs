//! Corpus generation and ingestion, hypothesis filters, verification runs,
//! and randomized checks of the supporting statements.

mod corpus;
mod hypothesis;
mod lemmas;
mod run;
mod soundness;

pub use corpus::{
    generate_labeled_graphs, ingest_corpus, labeled_graph, parse_corpus, Corpus, CorpusError,
    Diagnostic, Ingested,
};
pub use hypothesis::{
    Condition, ConditionCheck, FilterResult, Hypothesis, HypothesisError, HypothesisKind,
};
pub use lemmas::{
    lemma_suite, lemma_suite_with, CoverageOracle, ExteriorOracle, LemmaOracles, LemmaReport,
    LemmaTally, TrialShape, UnionOracle,
};
pub use run::{
    graph_label, judge, verify, Conclusion, Report, Verdict, VerifyError, VerifyOptions, Witness,
};
pub use soundness::{check_surgery, SoundnessTally};
