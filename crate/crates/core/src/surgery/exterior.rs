//! Structure of a component of `G - V(C)`: either a singleton whose
//! attachment predecessors form an essential independent set with it, or a
//! longer cycle, or an induced `P2 u kP1`.

use std::collections::VecDeque;

use serde::Serialize;

use super::walk::Walk;
use super::{LongerCycle, Recipe, SurgeryError};
use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::OrientedCycle;
use crate::invariants::{EssentialSet, ForbiddenWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExteriorOutcome {
    Essential(EssentialSet),
    Longer(LongerCycle),
    /// The component has an edge; together with `k` attachment predecessors
    /// it induces `P2 u kP1`.
    Forbidden(ForbiddenWitness),
}

/// Shortest path from `a` to `b` inside `within`, preferring smaller ids.
fn path_within(g: &Graph, within: VertexSet, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in (g.neighbors(x) & within).iter() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

pub fn exterior_structure(
    g: &Graph,
    k: usize,
    cycle: &OrientedCycle,
    component: VertexSet,
) -> Result<ExteriorOutcome, SurgeryError> {
    OrientedCycle::new(g, cycle.vertices().to_vec())?;
    let outside = g.vertices() - cycle.vertex_set();
    let is_component = g.check_set(component).is_ok()
        && component.first().is_some_and(|h| {
            component.is_subset(outside) && g.reach_within(h, outside) == component
        });
    if !is_component {
        return Err(SurgeryError::NotAComponent(component));
    }
    let attach = g.neighbors_of_set(component) & cycle.vertex_set();
    let preds = cycle.preds(attach);

    for x in preds.iter() {
        for y in (g.neighbors(x) & preds).iter() {
            let (xp, yp) = (cycle.succ(x), cycle.succ(y));
            let a = (g.neighbors(xp) & component)
                .first()
                .expect("x^+ attaches to the component");
            let b = (g.neighbors(yp) & component)
                .first()
                .expect("y^+ attaches to the component");
            let inner = path_within(g, component, a, b).expect("components are connected");
            let recipe = Recipe::ExteriorChord;
            let mut walk = Walk::on(cycle).fwd(yp, x).bwd(y, xp);
            for v in inner {
                walk = walk.then(v);
            }
            return Ok(ExteriorOutcome::Longer(LongerCycle {
                cycle: walk.close(g, recipe)?,
                recipe,
            }));
        }
    }
    for h in component.iter() {
        if let Some(y) = (g.neighbors(h) & preds).first() {
            let yp = cycle.succ(y);
            let b = (g.neighbors(yp) & component)
                .first()
                .expect("y^+ attaches to the component");
            let inner = path_within(g, component, h, b).expect("components are connected");
            let recipe = Recipe::ExteriorDetour;
            let mut walk = Walk::on(cycle);
            for v in inner {
                walk = walk.then(v);
            }
            let cycle = walk.fwd(yp, y).close(g, recipe)?;
            return Ok(ExteriorOutcome::Longer(LongerCycle { cycle, recipe }));
        }
    }
    if component.len() == 1 {
        let u0 = component.first().unwrap();
        return Ok(ExteriorOutcome::Essential(EssentialSet {
            members: preds.with(u0),
            center: u0,
        }));
    }
    let edge = g
        .edges()
        .into_iter()
        .find(|&(a, b)| component.contains(a) && component.contains(b))
        .expect("a connected component with two vertices has an edge");
    if preds.len() < k {
        return Err(SurgeryError::HypothesisViolation(format!(
            "component {component:?} attaches to the cycle at {} < k = {k} vertices",
            preds.len()
        )));
    }
    let isolated: VertexSet = preds.iter().take(k).collect();
    Ok(ExteriorOutcome::Forbidden(ForbiddenWitness {
        edge,
        isolated,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::context::tests::c5_plus_hub;
    use super::*;
    use crate::hamiltonicity::longest_cycle;

    #[test]
    fn petersen_singleton() {
        let g = Graph::petersen();
        let c = longest_cycle(&g).unwrap().unwrap();
        let h = g.vertices() - c.vertex_set();
        let ExteriorOutcome::Essential(set) = exterior_structure(&g, 3, &c, h).unwrap() else {
            panic!("expected an essential set")
        };
        assert_eq!(set.center, h.first().unwrap());
        assert_eq!(set.len(), 4);
        assert!(set.is_valid_in(&g));
        // distances from the center, by BFS on the raw adjacency
        let dist = g.distances_from(set.center);
        for v in set.members.without(set.center).iter() {
            assert_eq!(dist[v], Some(2));
        }
    }

    #[test]
    fn c5_hub() {
        let (g, c) = c5_plus_hub();
        let out = exterior_structure(&g, 2, &c, VertexSet::singleton(5)).unwrap();
        let expected: VertexSet = [5, 4, 1].into_iter().collect();
        assert_eq!(
            out,
            ExteriorOutcome::Essential(EssentialSet {
                members: expected,
                center: 5
            })
        );
    }

    #[test]
    fn adjacent_predecessors_give_longer_cycle() {
        // Search small graphs for a cycle and component whose attachment
        // predecessors are adjacent; the output must be a strictly longer cycle.
        let mut found = 0;
        for bits in 0u32..1 << 10 {
            let extra: Vec<(usize, usize)> = [
                (0, 2),
                (0, 3),
                (1, 3),
                (1, 4),
                (2, 4),
                (5, 0),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
            ]
            .into_iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
            let g = Graph::from_edges(6, Graph::cycle(5).edges().into_iter().chain(extra)).unwrap();
            let c = OrientedCycle::new(&g, (0..5).collect()).unwrap();
            match exterior_structure(&g, 2, &c, VertexSet::singleton(5)).unwrap() {
                ExteriorOutcome::Longer(l) => {
                    assert!(l.cycle.is_valid_in(&g));
                    assert!(l.cycle.len() > c.len());
                    found += 1;
                }
                ExteriorOutcome::Essential(set) => assert!(set.is_valid_in(&g)),
                ExteriorOutcome::Forbidden(_) => unreachable!("singleton component"),
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn two_vertex_component() {
        // C6 with an exterior edge 6-7; 6 sees 0, 7 sees 3. Attachment
        // predecessors {5, 2} are independent and far from the edge.
        let g = Graph::from_edges(
            8,
            Graph::cycle(6)
                .edges()
                .into_iter()
                .chain([(6, 7), (6, 0), (7, 3)]),
        )
        .unwrap();
        let c = OrientedCycle::new(&g, (0..6).collect()).unwrap();
        let h: VertexSet = [6, 7].into_iter().collect();
        let ExteriorOutcome::Forbidden(w) = exterior_structure(&g, 2, &c, h).unwrap() else {
            panic!("expected a forbidden witness")
        };
        assert!(w.is_valid_in(&g, 2));
        assert!(matches!(
            exterior_structure(&g, 3, &c, h),
            Err(SurgeryError::HypothesisViolation(_))
        ));
    }

    #[test]
    fn rejects_non_components() {
        let (g, c) = c5_plus_hub();
        assert_eq!(
            exterior_structure(&g, 2, &c, VertexSet::singleton(0)),
            Err(SurgeryError::NotAComponent(VertexSet::singleton(0)))
        );
        assert!(exterior_structure(&g, 2, &c, VertexSet::EMPTY).is_err());
    }
}
