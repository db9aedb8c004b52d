//! Cycle surgery around a longest non-Hamiltonian cycle and a full replay of
//! the structural argument that forces the Petersen graph.
//!
//! Indices of hub vertices (`x_1..x_m`, the neighbors of the exterior vertex
//! on the cycle) are 1-based and taken modulo `m`; everything else uses
//! 0-based graph vertex ids.

mod certificate;
mod context;
mod exterior;
mod good_path;
mod intervals;
mod replay;
mod splices;
mod walk;

use serde::Serialize;
use thiserror::Error;

pub use certificate::{
    petersen_assembly, terminal_facts, AssemblyError, Fact, FactKind, StructureCertificate,
};
pub use context::SurgeryContext;
pub use exterior::{exterior_structure, ExteriorOutcome};
pub use good_path::{
    close_good_path, good_path_one_hop, good_path_three_hop, good_path_two_hop, EndpointFacts,
    GoodPath, PathClosure,
};
pub use intervals::{bad_interval, interval_equivalence, IntervalEquivalence};
pub use replay::{
    replay_from_context, replay_proof, Replay, ReplayOutcome, TraceStep, TraceWitness,
};
pub use splices::{
    degree_exchange, exterior_pair_splice, hub_exchange, late_neighbor_splice, successor_exchange,
    triple_interval_splice,
};

use crate::graph::VertexSet;
use crate::hamiltonicity::{CycleError, OrientedCycle};
use crate::invariants::InvariantError;
use crate::limits::ResourceLimit;

/// Which construction produced a cycle or path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    /// Two adjacent predecessors of an exterior component's attachments.
    ExteriorChord,
    /// An exterior vertex adjacent to the predecessor of an attachment.
    ExteriorDetour,
    /// `x_i C x_i^{-2} u0 x_i`.
    PredecessorHubExchange,
    /// `x_i C x_j^- x_i^{-2} <-C x_j u0 x_i`.
    PredecessorChordExchange,
    /// An exterior vertex adjacent to two hub predecessors.
    ExteriorPair,
    /// A neighbor of `v` in `X^-` with index past `q`.
    LateNeighbor,
    /// `x_q^{-2}` is itself a hub.
    HubDetour,
    /// Reroute around `x_q^-`, then insert it between `u` and `v`.
    ChordDetour,
    /// Good path with segments `C[x_q,u]` and `C[v,x_a^{-2}]`.
    OneHopPath,
    /// Good path with segments `C[x_q,u]` and `C[x_a^-,x_b^{-2}]`.
    TwoHopPath,
    /// Good path with segments `C[x_q,u]`, `C[v,x_a^{-2}]`, `C[x_b^-,x_c^{-2}]`.
    ThreeHopPath,
    /// Good path whose endpoint sees `u0`.
    PathHubClosure,
    /// Good path whose endpoint sees a hub predecessor inside a good segment.
    PathSegmentClosure,
    /// Chords across three consecutive intervals.
    TripleInterval,
    /// Frees `x_i^+` using a chord from `x_i^{+2}` to another hub successor.
    SuccessorExchange,
    /// Frees a hub vertex on the nine-vertex cycle.
    HubExchange,
}

/// A cycle strictly longer than the context cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongerCycle {
    pub cycle: OrientedCycle,
    pub recipe: Recipe,
}

/// A cycle of the same length as the context cycle that leaves `freed` off it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exchange {
    pub cycle: OrientedCycle,
    pub freed: usize,
    pub recipe: Recipe,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("not a cycle of the graph: {0}")]
    NotACycle(#[from] CycleError),
    #[error("{0:?} is not a component of the graph minus the cycle")]
    NotAComponent(VertexSet),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("hub index {index} is outside 1..={m}")]
    InvalidIndex { index: usize, m: usize },
    #[error("{op}: precondition failed: {detail}")]
    Precondition { op: &'static str, detail: String },
    #[error("{recipe:?} produced an invalid walk: {detail}")]
    InvalidSplice { recipe: Recipe, detail: String },
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),
    #[error("internal consistency failure at {step}: {detail}")]
    InternalConsistency { step: String, detail: String },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
}

impl SurgeryError {
    pub(crate) fn precondition(op: &'static str, detail: impl Into<String>) -> Self {
        SurgeryError::Precondition {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn internal(step: &str, detail: impl Into<String>) -> Self {
        SurgeryError::InternalConsistency {
            step: step.to_string(),
            detail: detail.into(),
        }
    }
}
