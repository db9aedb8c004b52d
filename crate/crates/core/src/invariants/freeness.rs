//! Detection of induced copies of `P2 u kP1` (one edge plus `k` isolated vertices).

use serde::Serialize;

use super::independence::find_independent;
use crate::graph::{Graph, VertexSet};

/// An induced `P2 u kP1`: the edge plus the `k` independent vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub edge: (usize, usize),
    pub isolated: VertexSet,
}

impl ForbiddenWitness {
    /// Re-checks that the witness really induces `P2 u kP1` in `g`.
    pub fn is_valid_in(&self, g: &Graph, k: usize) -> bool {
        let (x, y) = self.edge;
        g.has_edge(x, y)
            && self.isolated.len() == k
            && !self.isolated.contains(x)
            && !self.isolated.contains(y)
            && !self.isolated.intersects(g.neighbors(x) | g.neighbors(y))
            && g.is_independent(self.isolated).unwrap_or(false)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// First induced `P2 u kP1` found, scanning edges in [`Graph::edges`] order.
pub fn find_p2kp1(g: &Graph, k: usize) -> Option<ForbiddenWitness> {
    for (x, y) in g.edges() {
        let far = g.vertices()
            - g.neighbors(x)
            - g.neighbors(y)
            - VertexSet::singleton(x)
            - VertexSet::singleton(y);
        if let Some(isolated) = find_independent(g, far, k) {
            return Some(ForbiddenWitness {
                edge: (x, y),
                isolated,
            });
        }
    }
    None
}

/// True iff `g` has no induced subgraph isomorphic to `P2 u kP1`.
pub fn is_p2kp1_free(g: &Graph, k: usize) -> bool {
    find_p2kp1(g, k).is_none()
}
