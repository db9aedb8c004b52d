//! Exact Hamiltonicity, longest cycles, and Petersen-graph recognition.

mod cycle;
mod dp;
mod isomorphism;
mod longest;
mod search;

pub use cycle::{CycleError, OrientedCycle};
pub use dp::{hamiltonian_dp, DP_MAX_N};
pub use isomorphism::{are_isomorphic, is_petersen};
pub use longest::{
    all_longest_cycles, circumference, cycles_of_length, first_cycle_of_length, longest_cycle,
};

use crate::graph::Graph;
use crate::limits::{self, ResourceLimit};

/// A Hamiltonian cycle of `g` (normalized), or `None` when none exists.
/// The search is exhaustive, so `None` is a proof of non-Hamiltonicity.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<OrientedCycle>, ResourceLimit> {
    limits::check(
        "hamiltonian search",
        g.n(),
        limits::limits().hamiltonian_max_n,
    )?;
    Ok(search::hamiltonian_order(g).map(|order| {
        OrientedCycle::new(g, order)
            .expect("search emits valid cycles")
            .normalized()
    }))
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool, ResourceLimit> {
    Ok(hamiltonian_cycle(g)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    /// Longest cycle length by trying every vertex subset and every ordering
    /// of it (first vertex fixed).
    fn brute_circumference(g: &Graph) -> Option<usize> {
        fn perms(rest: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if k == rest.len() {
                return f(rest);
            }
            for i in k..rest.len() {
                rest.swap(k, i);
                if perms(rest, k + 1, f) {
                    return true;
                }
                rest.swap(k, i);
            }
            false
        }
        let mut best = None;
        for bits in 0u64..1 << g.n() {
            let s = VertexSet::from_bits(bits);
            if s.len() < 3 || best.is_some_and(|b| b >= s.len()) {
                continue;
            }
            let mut vs = s.to_vec();
            let first = vs.remove(0);
            let found = perms(&mut vs, 0, &mut |p| {
                let mut prev = first;
                for &v in p {
                    if !g.has_edge(prev, v) {
                        return false;
                    }
                    prev = v;
                }
                g.has_edge(prev, first)
            });
            if found {
                best = Some(s.len());
            }
        }
        best
    }

    fn kneser_5_2() -> Graph {
        let pairs: Vec<(usize, usize)> = (1..=5)
            .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// C5 on 0..5 plus vertex 5 adjacent to 0 and 2.
    fn c5_plus_hub() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap()
    }

    #[test]
    fn hamiltonian_examples() {
        let c6 = Graph::cycle(6);
        let w = hamiltonian_cycle(&c6).unwrap().unwrap();
        assert!(w.is_valid_in(&c6));
        assert_eq!(w.len(), 6);
        assert!(!is_hamiltonian(&Graph::petersen()).unwrap());
        assert!(!is_hamiltonian(&Graph::complete_bipartite(2, 3)).unwrap());
        assert!(!hamiltonian_dp(&Graph::petersen()).unwrap());
        assert!(!hamiltonian_dp(&Graph::complete_bipartite(2, 3)).unwrap());
        assert!(hamiltonian_dp(&Graph::complete_bipartite(3, 3)).unwrap());
        assert!(is_hamiltonian(&Graph::complete(3)).unwrap());
        assert!(!is_hamiltonian(&Graph::complete(2)).unwrap());
    }

    #[test]
    fn bipartite_parity() {
        // K_{a,b} with a != b cannot alternate sides around a spanning cycle.
        for a in 1..5 {
            for b in 1..5 {
                let g = Graph::complete_bipartite(a, b);
                let expected = a == b && a >= 2;
                assert_eq!(is_hamiltonian(&g).unwrap(), expected, "K_{a},{b}");
            }
        }
    }

    #[test]
    fn longest_examples() {
        assert_eq!(longest_cycle(&Graph::path(5)).unwrap(), None);
        assert_eq!(longest_cycle(&Graph::star(4)).unwrap(), None);
        let p = longest_cycle(&Graph::petersen()).unwrap().unwrap();
        assert_eq!(p.len(), 9);
        assert!(p.is_valid_in(&Graph::petersen()));
        assert_eq!(brute_circumference(&Graph::petersen()), Some(9));
        let g = c5_plus_hub();
        assert_eq!(brute_circumference(&g), Some(5));
        let c = longest_cycle(&g).unwrap().unwrap();
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn longest_tie_break() {
        // K4: lexicographically smallest normalized 4-cycle is 0-1-2-3.
        let c = longest_cycle(&Graph::complete(4)).unwrap().unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
        let all = all_longest_cycles(&Graph::complete(4)).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0], c);
        for w in all.windows(2) {
            assert!(w[0].vertices() < w[1].vertices());
        }
        // Every cycle appears exactly once, in normalized form.
        assert!(all.iter().all(|c| c.normalized() == *c));
        assert_eq!(cycles_of_length(&Graph::petersen(), 9).unwrap().len(), 20);
    }

    #[test]
    fn petersen_recognition() {
        assert!(is_petersen(&Graph::petersen()));
        assert!(!is_petersen(&Graph::cycle(10)));
        assert!(is_petersen(&kneser_5_2()));
        // Same degree sequence, different graph: the 5-prism plus rewiring.
        let prism = Graph::from_edges(
            10,
            (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain((0..5).map(|i| (i, i + 5)))
                .chain((0..5).map(|i| (5 + i, 5 + (i + 1) % 5))),
        )
        .unwrap();
        assert!(!is_petersen(&prism));
        assert!(are_isomorphic(&prism, &prism));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(120))]
        #[test]
        fn engines_agree(n in 3usize..9, bits in proptest::prelude::any::<u64>()) {
            let masks: Vec<u64> = (0..n).map(|v| bits.rotate_left(v as u32 * 7) | bits.rotate_right(v as u32 * 3)).collect();
            let g = Graph::from_masks_lossy(n, &masks);
            let bt = is_hamiltonian(&g).unwrap();
            proptest::prop_assert_eq!(bt, hamiltonian_dp(&g).unwrap());
            let lc = longest_cycle(&g).unwrap();
            proptest::prop_assert_eq!(lc.as_ref().map(|c| c.len()), brute_circumference(&g));
            proptest::prop_assert_eq!(bt, lc.as_ref().is_some_and(|c| c.len() == n));
            if let Some(c) = lc {
                proptest::prop_assert!(c.is_valid_in(&g));
                proptest::prop_assert_eq!(c.normalized(), c);
            }
        }
    }
}
