//! Essential independent sets, the essential independence number, and `mu_k`.

use serde::Serialize;

use super::independence::{all_independent, find_independent, independence_number};
use super::InvariantError;
use crate::graph::{Graph, VertexSet};
use crate::limits;
use crate::rational::Rational;

/// An independent set containing `center`, with every other member at
/// distance exactly two from `center`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EssentialSet {
    pub members: VertexSet,
    pub center: usize,
}

impl EssentialSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Checks the defining conditions directly (BFS distances, adjacency scan).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if g.check_set(self.members).is_err() || !self.members.contains(self.center) {
            return false;
        }
        if !g.is_independent_unchecked(self.members) {
            return false;
        }
        let dist = g.distances_from(self.center);
        self.members
            .without(self.center)
            .iter()
            .all(|v| dist[v] == Some(2))
    }

    /// Largest degree among the members.
    pub fn max_degree(&self, g: &Graph) -> usize {
        self.members.iter().map(|v| g.degree(v)).max().unwrap_or(0)
    }
}

fn check_cap(g: &Graph) -> Result<(), InvariantError> {
    limits::check(
        "essential-set search",
        g.n(),
        limits::limits().essential_max_n,
    )?;
    Ok(())
}

/// Every `(S, center)` pair with `|S| = k`, grouped by center in increasing
/// order and lexicographic within a center. A set with several valid centers
/// appears once per center.
pub fn essential_sets(
    g: &Graph,
    k: usize,
) -> Result<impl Iterator<Item = EssentialSet> + '_, InvariantError> {
    if k == 0 {
        return Err(InvariantError::InvalidParameter(
            "k must be at least 1".into(),
        ));
    }
    check_cap(g)?;
    Ok((0..g.n()).flat_map(move |center| {
        let second = g.second_neighborhood(center);
        all_independent(g, second, k - 1)
            .into_iter()
            .map(move |rest| EssentialSet {
                members: rest.with(center),
                center,
            })
    }))
}

/// Largest `k` with a `k`-essential independent set; 1 for any non-empty
/// graph without a distance-two pair, 0 for the empty graph.
pub fn alpha_e(g: &Graph) -> Result<usize, InvariantError> {
    check_cap(g)?;
    Ok((0..g.n())
        .map(|x| 1 + independence_number(g, g.second_neighborhood(x)))
        .max()
        .unwrap_or(0))
}

/// A `k`-essential independent set whose largest degree is minimum, if any exists.
pub fn mu_witness(g: &Graph, k: usize) -> Result<Option<EssentialSet>, InvariantError> {
    if k < 2 {
        return Err(InvariantError::InvalidParameter(
            "mu_k is defined for k >= 2".into(),
        ));
    }
    check_cap(g)?;
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    // Threshold search: the smallest bound d such that an essential set uses
    // only vertices of degree <= d.
    for d in degrees {
        let low: VertexSet = (0..g.n()).filter(|&v| g.degree(v) <= d).collect();
        for center in low.iter() {
            let pool = g.second_neighborhood(center) & low;
            if let Some(rest) = find_independent(g, pool, k - 1) {
                return Ok(Some(EssentialSet {
                    members: rest.with(center),
                    center,
                }));
            }
        }
    }
    Ok(None)
}

/// `mu_k(G)`: minimum over `k`-essential independent sets of their largest
/// degree; `+inf` when `alpha_e(G) < k`.
pub fn mu(g: &Graph, k: usize) -> Result<Rational, InvariantError> {
    Ok(match mu_witness(g, k)? {
        Some(s) => Rational::from(s.max_degree(g)),
        None => Rational::Infinity,
    })
}
