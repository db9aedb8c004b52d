//! Checkable statements about independent sets in `(P2 u kP1)`-free graphs.
//!
//! Each oracle validates its preconditions first and reports a violation as
//! an error, so that a `false` return always means the statement itself failed.

use thiserror::Error;

use super::freeness::is_p2kp1_free;
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("graph is not (P2 u {0}P1)-free")]
    NotFree(usize),
    #[error("set {0:?} is not independent")]
    NotIndependent(VertexSet),
    #[error("sets share {shared} vertices, need at least {needed}")]
    SmallOverlap { shared: usize, needed: usize },
    #[error("vertex {0} has no neighbor in the set")]
    NotANeighbor(usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_free_and_independent(
    g: &Graph,
    k: usize,
    sets: &[VertexSet],
) -> Result<(), PreconditionError> {
    if k == 0 {
        return Err(PreconditionError::ZeroK);
    }
    for &s in sets {
        if !g.is_independent(s)? {
            return Err(PreconditionError::NotIndependent(s));
        }
    }
    if !is_p2kp1_free(g, k) {
        return Err(PreconditionError::NotFree(k));
    }
    Ok(())
}

/// For independent `a`, `b` sharing at least `k` vertices in a
/// `(P2 u kP1)`-free graph: is `a u b` independent?
pub fn union_independence_oracle(
    g: &Graph,
    k: usize,
    a: VertexSet,
    b: VertexSet,
) -> Result<bool, PreconditionError> {
    require_free_and_independent(g, k, &[a, b])?;
    let shared = (a & b).len();
    if shared < k {
        return Err(PreconditionError::SmallOverlap { shared, needed: k });
    }
    Ok(g.is_independent_unchecked(a | b))
}

/// For independent `a` in a `(P2 u kP1)`-free graph and `x` adjacent to some
/// member of `a`: does `x` see at least `|a| - k + 1` members of `a`?
pub fn neighbor_coverage_oracle(
    g: &Graph,
    k: usize,
    a: VertexSet,
    x: usize,
) -> Result<bool, PreconditionError> {
    g.check_vertex(x)?;
    require_free_and_independent(g, k, &[a])?;
    let seen = (g.neighbors(x) & a).len();
    if seen == 0 {
        return Err(PreconditionError::NotANeighbor(x));
    }
    Ok(seen + k > a.len())
}
