//! Longest-cycle search in lexicographic order of normalized vertex sequences.

use super::cycle::OrientedCycle;
use super::search::hamiltonian_order;
use crate::graph::{Graph, VertexSet};
use crate::limits::{self, ResourceLimit};

struct LexCycles<'a> {
    g: &'a Graph,
    len: usize,
    start: usize,
    allowed: VertexSet,
    path: Vec<usize>,
    /// Stop at the first hit instead of collecting everything.
    first_only: bool,
    found: Vec<Vec<usize>>,
}

impl LexCycles<'_> {
    /// Returns true when the search should stop.
    fn dfs(&mut self, end: usize, visited: VertexSet) -> bool {
        let g = self.g;
        if self.path.len() == self.len {
            if g.has_edge(end, self.start) && self.path[1] < end {
                self.found.push(self.path.clone());
                return self.first_only;
            }
            return false;
        }
        let remaining = self.len - self.path.len();
        let open = self.allowed - visited;
        for next in (g.neighbors(end) & open).iter() {
            let rest = open.without(next);
            if remaining == 1 {
                if !g.has_edge(next, self.start) {
                    continue;
                }
            } else {
                let reach = g.reach_within(next, rest.with(next));
                if reach.len() < remaining
                    || !g.neighbors(self.start).intersects(reach.without(next))
                {
                    continue;
                }
            }
            self.path.push(next);
            let stop = self.dfs(next, visited.with(next));
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn search(g: &Graph, len: usize, first_only: bool) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if len < 3 || len > n {
        return out;
    }
    for start in 0..n {
        let allowed = VertexSet::full(n) - VertexSet::full(start + 1);
        if n - start < len || g.reach_within(start, allowed.with(start)).len() < len {
            continue;
        }
        let mut s = LexCycles {
            g,
            len,
            start,
            allowed,
            path: vec![start],
            first_only,
            found: Vec::new(),
        };
        s.dfs(start, VertexSet::singleton(start));
        out.append(&mut s.found);
        if first_only && !out.is_empty() {
            break;
        }
    }
    out
}

fn to_cycle(g: &Graph, order: Vec<usize>) -> OrientedCycle {
    OrientedCycle::new(g, order).expect("search only emits valid cycles")
}

/// The lexicographically smallest normalized cycle of exactly `len` vertices.
pub fn first_cycle_of_length(
    g: &Graph,
    len: usize,
) -> Result<Option<OrientedCycle>, ResourceLimit> {
    limits::check("cycle search", g.n(), limits::limits().hamiltonian_max_n)?;
    Ok(search(g, len, true)
        .into_iter()
        .next()
        .map(|o| to_cycle(g, o)))
}

/// Every cycle of exactly `len` vertices, each once, normalized and in lexicographic order.
pub fn cycles_of_length(g: &Graph, len: usize) -> Result<Vec<OrientedCycle>, ResourceLimit> {
    limits::check("cycle search", g.n(), limits::limits().hamiltonian_max_n)?;
    Ok(search(g, len, false)
        .into_iter()
        .map(|o| to_cycle(g, o))
        .collect())
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components(VertexSet::EMPTY).map(|c| c.len()).unwrap_or(0) == g.n()
}

/// Length of a longest cycle (`None` for forests).
pub fn circumference(g: &Graph) -> Result<Option<usize>, ResourceLimit> {
    Ok(longest_cycle(g)?.map(|c| c.len()))
}

/// A longest cycle: the lexicographically smallest vertex sequence among
/// maximum-length cycles, starting at its smallest vertex and heading toward
/// that vertex's smaller cycle neighbor. `None` for forests.
pub fn longest_cycle(g: &Graph) -> Result<Option<OrientedCycle>, ResourceLimit> {
    limits::check("cycle search", g.n(), limits::limits().hamiltonian_max_n)?;
    if g.n() < 3 || is_forest(g) {
        return Ok(None);
    }
    let top = if hamiltonian_order(g).is_some() {
        g.n()
    } else {
        g.n() - 1
    };
    for len in (3..=top).rev() {
        if let Some(c) = first_cycle_of_length(g, len)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Every longest cycle, normalized, in lexicographic order.
pub fn all_longest_cycles(g: &Graph) -> Result<Vec<OrientedCycle>, ResourceLimit> {
    match longest_cycle(g)? {
        Some(c) => cycles_of_length(g, c.len()),
        None => Ok(Vec::new()),
    }
}
