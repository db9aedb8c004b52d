//! Runs every surgery operation over every index choice on a given cycle and
//! checks each output against its contract.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::hamiltonicity::OrientedCycle;
use crate::surgery::{
    close_good_path, degree_exchange, exterior_pair_splice, exterior_structure, good_path_one_hop,
    good_path_three_hop, good_path_two_hop, hub_exchange, late_neighbor_splice,
    replay_from_context, successor_exchange, triple_interval_splice, Exchange, ExteriorOutcome,
    GoodPath, LongerCycle, PathClosure, ReplayOutcome, SurgeryContext, SurgeryError,
};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SoundnessTally {
    pub contexts: u64,
    pub longer_cycles: u64,
    pub exchanges: u64,
    pub good_paths: u64,
    pub certificates: u64,
    pub by_recipe: BTreeMap<String, u64>,
    pub violations: Vec<String>,
}

impl SoundnessTally {
    pub fn merge(mut self, other: SoundnessTally) -> SoundnessTally {
        self.contexts += other.contexts;
        self.longer_cycles += other.longer_cycles;
        self.exchanges += other.exchanges;
        self.good_paths += other.good_paths;
        self.certificates += other.certificates;
        for (k, v) in other.by_recipe {
            *self.by_recipe.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self
    }

    fn violation(&mut self, g: &Graph, what: String) {
        if self.violations.len() < 20 {
            self.violations
                .push(format!("{}: {what}", super::graph_label(g)));
        }
    }

    fn recipe(&mut self, name: String) {
        *self.by_recipe.entry(name).or_default() += 1;
    }

    fn longer(&mut self, g: &Graph, base: &OrientedCycle, op: &str, l: &LongerCycle) {
        self.longer_cycles += 1;
        self.recipe(format!("{:?}", l.recipe));
        if !l.cycle.is_valid_in(g) || l.cycle.len() <= base.len() {
            self.violation(
                g,
                format!(
                    "{op} ({:?}) returned {:?}, base length {}",
                    l.recipe,
                    l.cycle.vertices(),
                    base.len()
                ),
            );
        }
    }

    fn exchange(&mut self, g: &Graph, base: &OrientedCycle, u0: usize, op: &str, e: &Exchange) {
        self.exchanges += 1;
        self.recipe(format!("{:?}", e.recipe));
        let ok = e.cycle.is_valid_in(g)
            && e.cycle.len() == base.len()
            && base.contains(e.freed)
            && !e.cycle.contains(e.freed)
            && e.cycle.contains(u0);
        if !ok {
            self.violation(
                g,
                format!(
                    "{op} ({:?}) exchange {:?} freeing {}",
                    e.recipe,
                    e.cycle.vertices(),
                    e.freed
                ),
            );
        }
    }

    /// Only a splice that fails to close is a soundness failure; the other
    /// errors are the operations declining inputs outside their scope.
    fn error(&mut self, g: &Graph, op: &str, e: SurgeryError) {
        if let SurgeryError::InvalidSplice { .. } = e {
            self.violation(g, format!("{op}: {e}"));
        }
    }

    fn good_path(&mut self, ctx: &SurgeryContext, gp: Result<GoodPath, SurgeryError>, op: &str) {
        let g = ctx.graph();
        let gp = match gp {
            Ok(gp) => gp,
            Err(e) => return self.error(g, op, e),
        };
        self.good_paths += 1;
        if let Err(e) = gp.check(ctx) {
            return self.violation(g, format!("{op}: {e}"));
        }
        match close_good_path(ctx, &gp) {
            Ok(PathClosure::Longer(l)) => self.longer(g, ctx.cycle(), op, &l),
            Ok(PathClosure::Blocked(facts)) => {
                if !facts.holds(ctx) {
                    self.violation(g, format!("{op}: blocked endpoint facts fail"));
                }
            }
            Err(e) => self.error(g, op, e),
        }
    }
}

/// Checks `exterior_structure` on every component off `cycle`, then every
/// context operation for every doubly covered edge with `u0` as the
/// exterior vertex.
pub fn check_surgery(g: &Graph, k: usize, cycle: &OrientedCycle, u0: usize) -> SoundnessTally {
    let mut t = SoundnessTally::default();
    if let Ok(components) = g.components(cycle.vertex_set()) {
        for h in components {
            match exterior_structure(g, k, cycle, h) {
                Ok(ExteriorOutcome::Longer(l)) => t.longer(g, cycle, "exterior_structure", &l),
                Ok(ExteriorOutcome::Essential(s)) => {
                    if !s.is_valid_in(g) {
                        t.violation(g, format!("exterior_structure: {s:?} is not essential"));
                    }
                }
                Ok(ExteriorOutcome::Forbidden(w)) => {
                    if !w.is_valid_in(g, k) {
                        t.violation(
                            g,
                            format!("exterior_structure: {w:?} is not an induced P2 u kP1"),
                        );
                    }
                }
                Err(e) => t.error(g, "exterior_structure", e),
            }
        }
    }
    for (u, v) in cycle.edges() {
        let Ok(ctx) = SurgeryContext::with_edge(g, k, cycle, u0, (u, v)) else {
            continue;
        };
        check_context(&ctx, &mut t);
    }
    t
}

fn check_context(ctx: &SurgeryContext, t: &mut SoundnessTally) {
    t.contexts += 1;
    let g = ctx.graph();
    let c = ctx.cycle();
    let u0 = ctx.u0();
    let m = ctx.m();

    for i in 1..=m {
        match degree_exchange(ctx, i) {
            Ok(Some(e)) => t.exchange(g, c, u0, "degree_exchange", &e),
            Ok(None) => {}
            Err(e) => t.error(g, "degree_exchange", e),
        }
        match successor_exchange(ctx, i) {
            Ok(Some(e)) => t.exchange(g, c, u0, "successor_exchange", &e),
            Ok(None) => {}
            Err(e) => t.error(g, "successor_exchange", e),
        }
        match hub_exchange(ctx, i) {
            Ok(Some(e)) => t.exchange(g, c, u0, "hub_exchange", &e),
            Ok(None) => {}
            Err(e) => t.error(g, "hub_exchange", e),
        }
        match triple_interval_splice(ctx, i) {
            Ok(Some(l)) => t.longer(g, c, "triple_interval_splice", &l),
            Ok(None) => {}
            Err(e) => t.error(g, "triple_interval_splice", e),
        }
    }
    for w in (g.vertices() - c.vertex_set()).iter().filter(|&w| w != u0) {
        match exterior_pair_splice(ctx, w) {
            Ok(Some(l)) => t.longer(g, c, "exterior_pair_splice", &l),
            Ok(None) => {}
            Err(e) => t.error(g, "exterior_pair_splice", e),
        }
    }
    match late_neighbor_splice(ctx) {
        Ok(Some(l)) => t.longer(g, c, "late_neighbor_splice", &l),
        Ok(None) => {}
        Err(e) => t.error(g, "late_neighbor_splice", e),
    }
    for a in 1..=m {
        t.good_path(ctx, good_path_one_hop(ctx, a), "good_path_one_hop");
        for b in 1..=m {
            t.good_path(ctx, good_path_two_hop(ctx, a, b), "good_path_two_hop");
            for cc in 1..=m {
                t.good_path(
                    ctx,
                    good_path_three_hop(ctx, a, b, cc),
                    "good_path_three_hop",
                );
            }
        }
    }
    match replay_from_context(ctx) {
        Ok(r) => match r.outcome {
            ReplayOutcome::LongerCycle(l) => t.longer(g, c, "replay", &l),
            ReplayOutcome::Exchange(e) => t.exchange(g, c, u0, "replay", &e),
            ReplayOutcome::Certificate(cert) => {
                t.certificates += 1;
                if let Some(f) = cert.first_failure(g) {
                    t.violation(g, format!("replay certificate fact {} fails", f.id));
                }
            }
        },
        Err(e) => t.error(g, "replay", e),
    }
}
