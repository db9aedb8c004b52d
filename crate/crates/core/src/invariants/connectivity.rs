//! Vertex connectivity by unit-capacity max-flow on the vertex-split network.

use crate::graph::{Graph, VertexSet};

/// Maximum number of internally vertex-disjoint `s`-`t` paths, for distinct
/// non-adjacent `s` and `t`.
///
/// Node `v` of the split network is `v` (in-copy) and `v + n` (out-copy);
/// every vertex other than `s` and `t` carries capacity one. Residual arcs are
/// kept as 128-bit masks since no arc ever has a reverse twin in the original
/// network.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "local connectivity needs non-adjacent distinct ends"
    );
    let n = g.n();
    let mut residual = vec![0u128; 2 * n];
    for v in 0..n {
        residual[v] |= 1u128 << (v + n);
        for u in g.neighbors(v).iter() {
            residual[v + n] |= 1u128 << u;
        }
    }
    let source = s + n;
    let sink = t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; 2 * n];
    loop {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        let mut seen: u128 = 1u128 << source;
        let mut queue = vec![source];
        let mut head = 0;
        let mut found = false;
        while head < queue.len() && !found {
            let x = queue[head];
            head += 1;
            let mut next = residual[x] & !seen;
            while next != 0 {
                let y = next.trailing_zeros() as usize;
                next &= next - 1;
                seen |= 1u128 << y;
                parent[y] = x;
                if y == sink {
                    found = true;
                    break;
                }
                queue.push(y);
            }
        }
        if !found {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            residual[x] &= !(1u128 << y);
            residual[y] |= 1u128 << x;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity `kappa(G)`: `n - 1` for complete graphs, otherwise the
/// minimum local connectivity over non-adjacent pairs (Even's pair schedule).
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i < n && i <= best {
        let non_adjacent = VertexSet::full(n) - VertexSet::full(i + 1) - g.neighbors(i);
        for j in non_adjacent.iter() {
            best = best.min(local_connectivity(g, i, j));
        }
        i += 1;
    }
    best
}
