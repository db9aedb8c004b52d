//! Exact hypothesis-side invariants: connectivity, toughness, forbidden
//! induced `P2 u kP1`, essential independent sets, `alpha_e`, and `mu_k`.

mod connectivity;
mod essential;
mod freeness;
mod independence;
mod lemmas;
mod toughness;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use connectivity::{connectivity, local_connectivity};
pub use essential::{alpha_e, essential_sets, mu, mu_witness, EssentialSet};
pub use freeness::{find_p2kp1, is_p2kp1_free, ForbiddenWitness};
pub use lemmas::{neighbor_coverage_oracle, union_independence_oracle, PreconditionError};
pub use toughness::{is_t_tough, toughness, toughness_with_witness, ToughnessWitness};

use crate::graph::Graph;
use crate::limits::ResourceLimit;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Every invariant of one graph, for `k` in `1..=max_k` (freeness) and
/// `2..=max_k + 1` (`mu`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub kappa: usize,
    pub toughness: Rational,
    pub alpha_e: usize,
    pub mu: BTreeMap<usize, Rational>,
    pub freeness: BTreeMap<usize, bool>,
}

impl InvariantReport {
    pub fn compute(g: &Graph, max_k: usize) -> Result<Self, InvariantError> {
        if max_k == 0 {
            return Err(InvariantError::InvalidParameter(
                "max k must be at least 1".into(),
            ));
        }
        let mut mu_map = BTreeMap::new();
        for k in 2..=max_k + 1 {
            mu_map.insert(k, mu(g, k)?);
        }
        let freeness = (1..=max_k).map(|k| (k, is_p2kp1_free(g, k))).collect();
        Ok(InvariantReport {
            n: g.n(),
            edges: g.edge_count(),
            min_degree: g.min_degree(),
            kappa: connectivity(g),
            toughness: toughness(g)?,
            alpha_e: alpha_e(g)?,
            mu: mu_map,
            freeness,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_report() {
        let r = InvariantReport::compute(&Graph::complete(4), 2).unwrap();
        assert_eq!(r.kappa, 3);
        assert_eq!(r.toughness, Rational::Infinity);
        assert_eq!(r.freeness[&2], true);
        assert_eq!(r.mu[&3], Rational::Infinity);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["toughness"], "inf");
        assert_eq!(json["mu"]["3"], "inf");
        assert_eq!(json["freeness"]["2"], true);
    }

    #[test]
    fn petersen_report() {
        let r = InvariantReport::compute(&Graph::petersen(), 3).unwrap();
        assert_eq!(r.kappa, 3);
        assert_eq!(r.toughness, Rational::new(4, 3));
        assert_eq!(r.alpha_e, 4);
        assert_eq!(r.mu[&4], Rational::integer(3));
        assert_eq!(r.freeness[&2], false);
        assert_eq!(r.freeness[&3], true);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["toughness"]["num"], 4);
        assert_eq!(json["toughness"]["den"], 3);
    }
}
