use crate::graph::Graph;

/// Exact isomorphism test by degree-respecting backtracking.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for target in 0..h.n() {
        if used[target] || g.degree(v) != h.degree(target) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], target)) {
            continue;
        }
        map[v] = target;
        used[target] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[target] = false;
    }
    map[v] = usize::MAX;
    false
}

/// True iff `g` is isomorphic to the Petersen graph.
pub fn is_petersen(g: &Graph) -> bool {
    g.n() == 10
        && g.edge_count() == 15
        && (0..10).all(|v| g.degree(v) == 3)
        && are_isomorphic(g, &Graph::petersen())
}
