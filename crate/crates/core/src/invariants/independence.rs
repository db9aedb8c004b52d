//! Small exact independent-set searches over vertex masks.

use crate::graph::{Graph, VertexSet};

/// Some independent subset of `candidates` with exactly `size` members, if any.
/// Deterministic: prefers smaller vertex ids.
pub(crate) fn find_independent(g: &Graph, candidates: VertexSet, size: usize) -> Option<VertexSet> {
    fn go(g: &Graph, cand: VertexSet, need: usize, acc: VertexSet) -> Option<VertexSet> {
        if need == 0 {
            return Some(acc);
        }
        if cand.len() < need {
            return None;
        }
        let v = cand.first()?;
        let rest = cand.without(v);
        go(g, rest - g.neighbors(v), need - 1, acc.with(v)).or_else(|| go(g, rest, need, acc))
    }
    go(g, candidates, size, VertexSet::EMPTY)
}

/// Size of a largest independent subset of `within`.
pub(crate) fn independence_number(g: &Graph, within: VertexSet) -> usize {
    fn go(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some(v) = cand.first() else {
            *best = size;
            return;
        };
        // An isolated or degree-one vertex (inside `cand`) can always be taken.
        let local = g.neighbors(v) & cand;
        if local.len() <= 1 {
            go(g, cand - local - VertexSet::singleton(v), size + 1, best);
            return;
        }
        go(g, cand.without(v) - g.neighbors(v), size + 1, best);
        go(g, cand.without(v), size, best);
    }
    let mut best = 0;
    go(g, within, 0, &mut best);
    best
}

/// Every independent subset of `candidates` of exactly `size` members, in
/// lexicographic order of their sorted member lists.
pub(crate) fn all_independent(g: &Graph, candidates: VertexSet, size: usize) -> Vec<VertexSet> {
    fn go(g: &Graph, cand: VertexSet, need: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(acc);
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            if rest.len() < need {
                return;
            }
            rest = rest.without(v);
            go(g, rest - g.neighbors(v), need - 1, acc.with(v), out);
        }
    }
    let mut out = Vec::new();
    go(g, candidates, size, VertexSet::EMPTY, &mut out);
    out
}
