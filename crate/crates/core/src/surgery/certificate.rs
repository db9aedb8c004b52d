//! Re-checkable facts about the extremal configuration, and the final
//! identification of the graph with the Petersen graph.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::{is_petersen, OrientedCycle};

/// One named statement about the graph and the certificate's cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub id: String,
    #[serde(flatten)]
    pub kind: FactKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FactKind {
    /// `N(vertex) ∩ domain = expected`
    NeighborsWithin {
        vertex: usize,
        domain: VertexSet,
        expected: VertexSet,
    },
    /// `|N(vertex) ∩ domain| = count`
    NeighborCountWithin {
        vertex: usize,
        domain: VertexSet,
        count: usize,
    },
    Adjacent {
        a: usize,
        b: usize,
    },
    /// `N(vertex) = expected`
    Neighborhood {
        vertex: usize,
        expected: VertexSet,
    },
    /// `V(G) - V(C) = expected`
    ExteriorIs {
        expected: VertexSet,
    },
    /// `to` lies `steps` places after `from` on the cycle.
    CycleStep {
        from: usize,
        steps: isize,
        to: usize,
    },
    /// The consecutive pairs of `walk` with both ends adjacent to `by` are exactly `expected`.
    DoublyCoveredEdges {
        walk: Vec<usize>,
        by: VertexSet,
        expected: Vec<(usize, usize)>,
    },
    /// `E(G[V(C)]) = E(C) ∪ chords`
    InducedChords {
        chords: Vec<(usize, usize)>,
    },
}

impl Fact {
    pub(crate) fn new(id: impl Into<String>, kind: FactKind) -> Self {
        Fact {
            id: id.into(),
            kind,
        }
    }

    pub fn holds(&self, g: &Graph, cycle: &OrientedCycle) -> bool {
        let in_range = |v: usize| v < g.n();
        match &self.kind {
            FactKind::NeighborsWithin {
                vertex,
                domain,
                expected,
            } => in_range(*vertex) && g.neighbors(*vertex) & *domain == *expected,
            FactKind::NeighborCountWithin {
                vertex,
                domain,
                count,
            } => in_range(*vertex) && (g.neighbors(*vertex) & *domain).len() == *count,
            FactKind::Adjacent { a, b } => in_range(*a) && in_range(*b) && g.has_edge(*a, *b),
            FactKind::Neighborhood { vertex, expected } => {
                in_range(*vertex) && g.neighbors(*vertex) == *expected
            }
            FactKind::ExteriorIs { expected } => g.vertices() - cycle.vertex_set() == *expected,
            FactKind::CycleStep { from, steps, to } => {
                cycle.contains(*from) && cycle.step(*from, *steps) == *to
            }
            FactKind::DoublyCoveredEdges { walk, by, expected } => {
                if walk.iter().any(|&v| !in_range(v)) {
                    return false;
                }
                let covered = g.neighbors_of_set(*by);
                let found: Vec<(usize, usize)> = walk
                    .windows(2)
                    .filter(|e| covered.contains(e[0]) && covered.contains(e[1]))
                    .map(|e| (e[0], e[1]))
                    .collect();
                found == *expected
            }
            FactKind::InducedChords { chords } => {
                let on = cycle.vertex_set();
                let induced: Vec<(usize, usize)> = g
                    .edges()
                    .into_iter()
                    .filter(|&(a, b)| on.contains(a) && on.contains(b))
                    .collect();
                let expected = induced.len() == cycle.len() + chords.len();
                expected
                    && induced.iter().all(|&(a, b)| {
                        cycle.has_cycle_edge(a, b)
                            || chords
                                .iter()
                                .any(|&(c, d)| (c, d) == (a, b) || (d, c) == (a, b))
                    })
            }
        }
    }
}

/// The terminal configuration reached by the replay: `(k, m) = (5t+3, 7t+3)`
/// and, for `t = 0`, the facts pinning down the whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCertificate {
    pub t: usize,
    pub k: usize,
    pub m: usize,
    pub cycle: OrientedCycle,
    pub u0: usize,
    pub hubs: Vec<usize>,
    pub facts: Vec<Fact>,
    pub petersen: bool,
}

impl StructureCertificate {
    /// The first fact that does not hold in `g`, if any.
    pub fn first_failure(&self, g: &Graph) -> Option<&Fact> {
        self.facts.iter().find(|f| !f.holds(g, &self.cycle))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssemblyError {
    #[error("certificate is not terminal: t = {t}, k = {k}, m = {m}")]
    NotTerminal { t: usize, k: usize, m: usize },
    #[error("certificate cycle is not a cycle of the graph")]
    InvalidCycle,
    #[error("fact {0} does not hold")]
    FactFailed(String),
}

/// The facts that describe the nine-vertex cycle with three hubs: hub
/// flanks, successor and predecessor chords, the lone exterior vertex,
/// hub spacing, hub neighborhoods, and the induced chord set.
pub fn terminal_facts(cycle: &OrientedCycle, u0: usize, hubs: &[usize]) -> Vec<Fact> {
    assert_eq!(hubs.len(), 3, "terminal facts need three hubs");
    let x = |i: isize| hubs[(i - 1).rem_euclid(3) as usize];
    let xm = |i: isize| cycle.pred(x(i));
    let xp = |i: isize| cycle.succ(x(i));
    let set = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();
    let x_minus = set(&[xm(1), xm(2), xm(3)]);
    let x_plus = set(&[xp(1), xp(2), xp(3)]);
    let mut facts = Vec::new();
    for i in 1..=3 {
        facts.push(Fact::new(
            format!("hub-flanks-{i}"),
            FactKind::NeighborsWithin {
                vertex: x(i),
                domain: x_minus | x_plus,
                expected: set(&[xm(i), xp(i)]),
            },
        ));
    }
    for i in 1..=3 {
        facts.push(Fact::new(
            format!("successor-chords-{i}"),
            FactKind::NeighborsWithin {
                vertex: xp(i),
                domain: x_minus,
                expected: set(&[xm(i + 1), xm(i + 2)]),
            },
        ));
    }
    for i in 1..=3 {
        facts.push(Fact::new(
            format!("predecessor-chords-{i}"),
            FactKind::NeighborsWithin {
                vertex: xm(i),
                domain: x_plus,
                expected: set(&[xp(i - 1), xp(i - 2)]),
            },
        ));
    }
    facts.push(Fact::new(
        "lone-exterior",
        FactKind::ExteriorIs {
            expected: VertexSet::singleton(u0),
        },
    ));
    for i in 1..=3 {
        facts.push(Fact::new(
            format!("successor-spacing-{i}"),
            FactKind::CycleStep {
                from: x(i),
                steps: 2,
                to: xm(i + 1),
            },
        ));
    }
    for i in 1..=3 {
        facts.push(Fact::new(
            format!("hub-neighborhood-{i}"),
            FactKind::Neighborhood {
                vertex: x(i),
                expected: set(&[u0, xp(i), xm(i)]),
            },
        ));
    }
    facts.push(Fact::new(
        "exterior-neighborhood",
        FactKind::Neighborhood {
            vertex: u0,
            expected: set(&[x(1), x(2), x(3)]),
        },
    ));
    facts.push(Fact::new(
        "cycle-chords",
        FactKind::InducedChords {
            chords: vec![(xp(1), xm(3)), (xp(2), xm(1)), (xp(3), xm(2))],
        },
    ));
    facts
}

/// Re-derives every terminal fact in `g`, re-checks the certificate's own
/// facts, and then tests isomorphism with the Petersen graph.
pub fn petersen_assembly(cert: &StructureCertificate, g: &Graph) -> Result<bool, AssemblyError> {
    if cert.t != 0 || cert.k != 3 || cert.m != 3 || cert.hubs.len() != 3 {
        return Err(AssemblyError::NotTerminal {
            t: cert.t,
            k: cert.k,
            m: cert.m,
        });
    }
    if !cert.cycle.is_valid_in(g) || cert.hubs.iter().any(|&h| !cert.cycle.contains(h)) {
        return Err(AssemblyError::InvalidCycle);
    }
    for fact in terminal_facts(&cert.cycle, cert.u0, &cert.hubs)
        .iter()
        .chain(&cert.facts)
    {
        if !fact.holds(g, &cert.cycle) {
            return Err(AssemblyError::FactFailed(fact.id.clone()));
        }
    }
    Ok(is_petersen(g))
}
