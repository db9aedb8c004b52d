//! Backtracking Hamiltonian-cycle search over neighbor bitmasks.

use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    start: usize,
    path: Vec<usize>,
}

impl Search<'_> {
    /// `end` is the current path end; `left` the unvisited vertices.
    fn extend(&mut self, end: usize, left: VertexSet) -> bool {
        let g = self.g;
        if left.is_empty() {
            return g.has_edge(end, self.start);
        }
        // Every unvisited vertex needs two usable cycle neighbors; one whose
        // only options include `end` must come next.
        let usable = left.with(end).with(self.start);
        let mut forced = None;
        for w in left.iter() {
            let avail = g.neighbors(w) & usable;
            if avail.len() < 2 {
                return false;
            }
            if avail.len() == 2 && avail.contains(end) && end != self.start {
                match forced {
                    None => forced = Some(w),
                    Some(_) if left.len() > 1 => return false,
                    Some(_) => {}
                }
            }
        }
        if !g.neighbors(self.start).intersects(left) {
            return false;
        }
        // Unvisited vertices must all hang off the current end.
        if g.reach_within(end, left.with(end)) != left.with(end) {
            return false;
        }
        let candidates = match forced {
            Some(w) => VertexSet::singleton(w),
            None => g.neighbors(end) & left,
        };
        for next in candidates.iter() {
            self.path.push(next);
            if self.extend(next, left.without(next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// A Hamiltonian cycle as a vertex sequence starting at 0, or `None`.
pub(crate) fn hamiltonian_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut s = Search {
        g,
        start: 0,
        path: vec![0],
    };
    s.extend(0, g.vertices().without(0)).then_some(s.path)
}
