//! Seeded random trials of the two independent-set statements and of the
//! exterior-component structure on longest cycles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::{longest_cycle, OrientedCycle};
use crate::invariants::{
    connectivity, is_p2kp1_free, neighbor_coverage_oracle, union_independence_oracle, EssentialSet,
    PreconditionError,
};
use crate::surgery::{exterior_structure, ExteriorOutcome, SurgeryError};

pub type UnionOracle = fn(&Graph, usize, VertexSet, VertexSet) -> Result<bool, PreconditionError>;
pub type CoverageOracle = fn(&Graph, usize, VertexSet, usize) -> Result<bool, PreconditionError>;
pub type ExteriorOracle =
    fn(&Graph, usize, &OrientedCycle, VertexSet) -> Result<ExteriorOutcome, SurgeryError>;

/// The routines under test; tests swap in broken versions to make sure
/// the suite notices.
#[derive(Clone, Copy)]
pub struct LemmaOracles {
    pub union: UnionOracle,
    pub coverage: CoverageOracle,
    pub exterior: ExteriorOracle,
}

impl Default for LemmaOracles {
    fn default() -> Self {
        LemmaOracles {
            union: union_independence_oracle,
            coverage: neighbor_coverage_oracle,
            exterior: exterior_structure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub name: &'static str,
    /// Random instances drawn, including those failing the preconditions.
    pub attempts: u64,
    /// Instances satisfying the preconditions.
    pub trials: u64,
    pub passed: u64,
    pub failures: Vec<String>,
    /// No instance satisfied the preconditions.
    pub vacuous: bool,
}

impl LemmaTally {
    fn new(name: &'static str) -> Self {
        LemmaTally {
            name,
            attempts: 0,
            trials: 0,
            passed: 0,
            failures: Vec::new(),
            vacuous: false,
        }
    }

    fn outcome(&mut self, ok: Result<(), String>) {
        self.trials += 1;
        match ok {
            Ok(()) => self.passed += 1,
            Err(e) if self.failures.len() < 10 => self.failures.push(e),
            Err(_) => {}
        }
    }

    pub fn all_passed(&self) -> bool {
        !self.vacuous && self.passed == self.trials
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub seed: u64,
    pub target_trials: u64,
    pub lemmas: Vec<LemmaTally>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.lemmas.iter().all(LemmaTally::all_passed)
    }
}

/// Ranges for the order and `k` of random instances. Longest cycles that
/// miss a vertex are rare in larger random graphs, so the exterior trials
/// use their own, smaller ranges.
#[derive(Debug, Clone, Copy)]
pub struct TrialShape {
    pub orders: (usize, usize),
    pub ks: (usize, usize),
    pub exterior_orders: (usize, usize),
    pub exterior_ks: (usize, usize),
    /// Attempts allowed per requested trial before giving up.
    pub patience: u64,
}

impl Default for TrialShape {
    fn default() -> Self {
        TrialShape {
            orders: (5, 9),
            ks: (1, 3),
            exterior_orders: (5, 7),
            exterior_ks: (1, 2),
            patience: 400,
        }
    }
}

const DENSITIES: [f64; 7] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = *DENSITIES.choose(rng).unwrap();
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Greedy independent set over a random order, extending `start`, stopping
/// at a random size between `start.len()` and maximal.
fn random_independent(rng: &mut ChaCha8Rng, g: &Graph, start: VertexSet) -> VertexSet {
    let mut order: Vec<usize> = (g.vertices() - start).iter().collect();
    order.shuffle(rng);
    let mut set = start;
    let stop = rng.gen_range(start.len()..=g.n());
    for v in order {
        if set.len() >= stop {
            break;
        }
        if (g.neighbors(v) & set).is_empty() {
            set.insert(v);
        }
    }
    set
}

fn random_subset(rng: &mut ChaCha8Rng, from: VertexSet, size: usize) -> VertexSet {
    let mut all = from.to_vec();
    all.shuffle(rng);
    all.into_iter().take(size).collect()
}

/// Runs `trials` precondition-satisfying instances of each statement.
pub fn lemma_suite(trials: u64, seed: u64) -> LemmaReport {
    lemma_suite_with(trials, seed, TrialShape::default(), LemmaOracles::default())
}

pub fn lemma_suite_with(
    trials: u64,
    seed: u64,
    shape: TrialShape,
    oracles: LemmaOracles,
) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = trials.saturating_mul(shape.patience);
    let draw_in = |rng: &mut ChaCha8Rng, orders: (usize, usize), ks: (usize, usize)| {
        let n = rng.gen_range(orders.0..=orders.1);
        let k = rng.gen_range(ks.0..=ks.1);
        (random_graph(rng, n), k)
    };
    let draw = |rng: &mut ChaCha8Rng| draw_in(rng, shape.orders, shape.ks);

    let mut union = LemmaTally::new("union-independence");
    while union.trials < trials && union.attempts < budget {
        union.attempts += 1;
        let (g, k) = draw(&mut rng);
        if !is_p2kp1_free(&g, k) {
            continue;
        }
        let a = random_independent(&mut rng, &g, VertexSet::EMPTY);
        if a.len() < k {
            continue;
        }
        let shared = random_subset(&mut rng, a, k);
        let b = random_independent(&mut rng, &g, shared);
        union.outcome(match (oracles.union)(&g, k, a, b) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!(
                "{}: {a:?} u {b:?} not independent (k = {k})",
                super::graph_label(&g)
            )),
            Err(e) => Err(format!(
                "{}: unexpected precondition error {e}",
                super::graph_label(&g)
            )),
        });
    }

    let mut coverage = LemmaTally::new("neighbor-coverage");
    while coverage.trials < trials && coverage.attempts < budget {
        coverage.attempts += 1;
        let (g, k) = draw(&mut rng);
        if !is_p2kp1_free(&g, k) {
            continue;
        }
        let a = random_independent(&mut rng, &g, VertexSet::EMPTY);
        let around = g.neighbors_of_set(a) - a;
        let Some(&x) = around.to_vec().choose(&mut rng) else {
            continue;
        };
        coverage.outcome(match (oracles.coverage)(&g, k, a, x) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!(
                "{}: {x} sees too few of {a:?} (k = {k})",
                super::graph_label(&g)
            )),
            Err(e) => Err(format!(
                "{}: unexpected precondition error {e}",
                super::graph_label(&g)
            )),
        });
    }

    let mut exterior = LemmaTally::new("exterior-singletons");
    while exterior.trials < trials && exterior.attempts < budget {
        exterior.attempts += 1;
        let (g, k) = draw_in(&mut rng, shape.exterior_orders, shape.exterior_ks);
        if connectivity(&g) < k || !is_p2kp1_free(&g, k) {
            continue;
        }
        let Ok(Some(cycle)) = longest_cycle(&g) else {
            continue;
        };
        let Ok(components) = g.components(cycle.vertex_set()) else {
            continue;
        };
        if components.is_empty() {
            continue;
        }
        exterior.outcome(check_exterior(&g, k, &cycle, &components, oracles.exterior));
    }

    for t in [&mut union, &mut coverage, &mut exterior] {
        t.vacuous = t.trials == 0;
    }
    LemmaReport {
        seed,
        target_trials: trials,
        lemmas: vec![union, coverage, exterior],
    }
}

fn check_exterior(
    g: &Graph,
    k: usize,
    cycle: &OrientedCycle,
    components: &[VertexSet],
    oracle: ExteriorOracle,
) -> Result<(), String> {
    let label = super::graph_label(g);
    for &h in components {
        let set = match oracle(g, k, cycle, h) {
            Ok(ExteriorOutcome::Essential(set)) => set,
            Ok(other) => return Err(format!("{label}: component {h:?} gave {other:?}")),
            Err(e) => return Err(format!("{label}: component {h:?}: {e}")),
        };
        let u0 = h.first().unwrap();
        let expected = cycle.preds(g.neighbors(u0) & cycle.vertex_set()).with(u0);
        let want = EssentialSet {
            members: expected,
            center: u0,
        };
        if h.len() != 1 || set != want || !set.is_valid_in(g) {
            return Err(format!("{label}: component {h:?} gave {set:?}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_passing() {
        let a = lemma_suite(150, 7);
        let b = lemma_suite(150, 7);
        assert_eq!(a, b);
        assert!(a.all_passed(), "{a:?}");
        for t in &a.lemmas {
            assert_eq!(t.trials, 150, "{t:?}");
        }
    }

    #[test]
    fn impossible_shape_is_vacuous() {
        // With k = 10 on at most 5 vertices no independent set is large
        // enough for the union statement, and no graph is 10-connected.
        let shape = TrialShape {
            orders: (3, 5),
            ks: (10, 10),
            exterior_orders: (3, 5),
            exterior_ks: (10, 10),
            patience: 5,
        };
        let r = lemma_suite_with(10, 1, shape, LemmaOracles::default());
        assert!(r.lemmas[0].vacuous);
        assert!(r.lemmas[2].vacuous);
        assert!(!r.all_passed());
    }

    fn disjoint_union(
        _: &Graph,
        _: usize,
        a: VertexSet,
        b: VertexSet,
    ) -> Result<bool, PreconditionError> {
        Ok((a & b).is_empty())
    }

    fn sees_everything(
        g: &Graph,
        _: usize,
        a: VertexSet,
        x: usize,
    ) -> Result<bool, PreconditionError> {
        Ok(g.neighbors(x) & a == a)
    }

    fn drops_center(
        g: &Graph,
        k: usize,
        c: &OrientedCycle,
        h: VertexSet,
    ) -> Result<ExteriorOutcome, SurgeryError> {
        match exterior_structure(g, k, c, h)? {
            ExteriorOutcome::Essential(s) => Ok(ExteriorOutcome::Essential(EssentialSet {
                members: s.members.without(s.center),
                center: s.center,
            })),
            other => Ok(other),
        }
    }

    #[test]
    fn broken_oracles_are_caught() {
        let oracles = LemmaOracles {
            union: disjoint_union,
            coverage: sees_everything,
            exterior: drops_center,
        };
        let r = lemma_suite_with(200, 3, TrialShape::default(), oracles);
        for t in &r.lemmas {
            assert!(!t.failures.is_empty(), "{} missed the mutation", t.name);
        }
        assert!(!r.all_passed());
    }
}
