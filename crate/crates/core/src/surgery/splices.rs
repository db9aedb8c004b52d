//! Explicit cycle rewirings: equal-length exchanges and strict extensions.

use super::context::Frame;
use super::walk::{close_sequence, Walk};
use super::{Exchange, LongerCycle, Recipe, SurgeryContext, SurgeryError};

/// Frees `x_i^-` from the cycle while keeping its length, either through
/// `x_i^{-2} u0` or through a chord `x_i^{-2} x_j^-`.
pub fn degree_exchange(ctx: &SurgeryContext, i: usize) -> Result<Option<Exchange>, SurgeryError> {
    frame_degree_exchange(ctx.frame(), i)
}

pub(crate) fn frame_degree_exchange(f: &Frame, i: usize) -> Result<Option<Exchange>, SurgeryError> {
    let i = f.check_index(i)?;
    let (xi, freed, a) = (f.x(i), f.xm(i), f.xm2(i));
    if f.g.has_edge(a, f.u0) {
        let recipe = Recipe::PredecessorHubExchange;
        let cycle = Walk::on(&f.cycle)
            .fwd(xi, a)
            .then(f.u0)
            .close(&f.g, recipe)?;
        return Ok(Some(Exchange {
            cycle,
            freed,
            recipe,
        }));
    }
    for j in 1..=f.m() as isize {
        if j != i && f.g.has_edge(a, f.xm(j)) {
            let recipe = Recipe::PredecessorChordExchange;
            let cycle = Walk::on(&f.cycle)
                .fwd(xi, f.xm(j))
                .bwd(a, f.x(j))
                .then(f.u0)
                .close(&f.g, recipe)?;
            return Ok(Some(Exchange {
                cycle,
                freed,
                recipe,
            }));
        }
    }
    Ok(None)
}

/// An exterior vertex `w != u0` adjacent to two hub predecessors (or, on the
/// reversed cycle, two hub successors) extends the cycle through `w` and `u0`.
pub fn exterior_pair_splice(
    ctx: &SurgeryContext,
    w: usize,
) -> Result<Option<LongerCycle>, SurgeryError> {
    frame_exterior_pair(ctx.frame(), w)
}

pub(crate) fn frame_exterior_pair(
    f: &Frame,
    w: usize,
) -> Result<Option<LongerCycle>, SurgeryError> {
    const OP: &str = "exterior_pair_splice";
    if w >= f.g.n() || f.cycle.contains(w) || w == f.u0 {
        return Err(SurgeryError::precondition(
            OP,
            format!("{w} is not an exterior vertex other than u0"),
        ));
    }
    if let Some(c) = pair_on(f, w)? {
        return Ok(Some(c));
    }
    let reflected = Frame::new(&f.g, f.k, &f.cycle.reversed(), f.u0)?;
    pair_on(&reflected, w)
}

fn pair_on(f: &Frame, w: usize) -> Result<Option<LongerCycle>, SurgeryError> {
    let idx = f.pred_indices(w);
    if idx.len() < 2 {
        return Ok(None);
    }
    let (i, j) = (idx[0] as isize, idx[1] as isize);
    let recipe = Recipe::ExteriorPair;
    let cycle = Walk::on(&f.cycle)
        .fwd(f.x(i), f.xm(j))
        .then(w)
        .bwd(f.xm(i), f.x(j))
        .then(f.u0)
        .close(&f.g, recipe)?;
    Ok(Some(LongerCycle { cycle, recipe }))
}

/// When `i_p >= q`, one of three rewirings yields a longer cycle. `None`
/// means `i_p < q` already holds, or no rewiring applies.
pub fn late_neighbor_splice(ctx: &SurgeryContext) -> Result<Option<LongerCycle>, SurgeryError> {
    let f = ctx.frame();
    let (u, v, q) = (ctx.u, ctx.v, ctx.q as isize);
    let Some(&ip) = ctx.ip.last() else {
        return Ok(None);
    };
    let ip = ip as isize;
    if ip < q {
        return Ok(None);
    }
    let w = Walk::on(&f.cycle);
    if ip > q {
        let recipe = Recipe::LateNeighbor;
        let cycle = w
            .fwd(f.x(ip), u)
            .bwd(f.xm(q), v)
            .bwd(f.xm(ip), f.x(q))
            .then(f.u0)
            .close(&f.g, recipe)?;
        return Ok(Some(LongerCycle { cycle, recipe }));
    }
    let (xq, xq1, xq2) = (f.x(q), f.xm(q), f.xm2(q));
    if f.g.has_edge(xq2, f.u0) {
        let recipe = Recipe::HubDetour;
        let cycle = w
            .fwd(xq, u)
            .then(xq1)
            .fwd(v, xq2)
            .then(f.u0)
            .close(&f.g, recipe)?;
        return Ok(Some(LongerCycle { cycle, recipe }));
    }
    let recipe = Recipe::ChordDetour;
    for i in 1..=f.m() as isize {
        if i == q || !f.g.has_edge(f.xm(i), xq2) {
            continue;
        }
        let mut seq = Walk::on(&f.cycle)
            .fwd(f.x(i), xq2)
            .bwd(f.xm(i), xq)
            .then(f.u0)
            .into_vec();
        let at = seq
            .iter()
            .position(|&z| z == u)
            .expect("u lies on the rerouted cycle");
        let len = seq.len();
        if seq[(at + 1) % len] == v {
            seq.insert(at + 1, xq1);
        } else if seq[(at + len - 1) % len] == v {
            seq.insert(at, xq1);
        } else {
            return Err(SurgeryError::InvalidSplice {
                recipe,
                detail: format!("uv is not an edge of {seq:?}"),
            });
        }
        let cycle = close_sequence(&f.g, seq, recipe)?;
        return Ok(Some(LongerCycle { cycle, recipe }));
    }
    Ok(None)
}

/// With chords `x_i x_{i+1}^+` and `x_i^+ x_{i+2}^-`, the cycle
/// `x_{i+2} C x_i x_{i+1}^+ C x_{i+2}^- x_i^+ C x_{i+1} u0 x_{i+2}`.
pub fn triple_interval_splice(
    ctx: &SurgeryContext,
    i: usize,
) -> Result<Option<LongerCycle>, SurgeryError> {
    const OP: &str = "triple_interval_splice";
    let f = ctx.frame();
    let i = f.check_index(i)?;
    if f.m() < 3 {
        return Err(SurgeryError::precondition(OP, "needs at least three hubs"));
    }
    if f.xp(i + 1) == f.x(i + 2) {
        return Err(SurgeryError::precondition(
            OP,
            "x_{i+1} and x_{i+2} are consecutive",
        ));
    }
    if !f.g.has_edge(f.x(i), f.xp(i + 1)) || !f.g.has_edge(f.xp(i), f.xm(i + 2)) {
        return Ok(None);
    }
    let recipe = Recipe::TripleInterval;
    let cycle = Walk::on(&f.cycle)
        .fwd(f.x(i + 2), f.x(i))
        .fwd(f.xp(i + 1), f.xm(i + 2))
        .fwd(f.xp(i), f.x(i + 1))
        .then(f.u0)
        .close(&f.g, recipe)?;
    Ok(Some(LongerCycle { cycle, recipe }))
}

/// Frees `x_i^+` using a chord from `x_i^{+2}` to some `x_j^+`, `j != i`:
/// `x_i^{+2} x_j^+ C x_i u0 x_j <-C x_i^{+2}`.
pub fn successor_exchange(
    ctx: &SurgeryContext,
    i: usize,
) -> Result<Option<Exchange>, SurgeryError> {
    let f = ctx.frame();
    let i = f.check_index(i)?;
    let a = f.cycle.step(f.x(i), 2);
    if a == f.x(i) {
        return Ok(None);
    }
    for j in 1..=f.m() as isize {
        if j == i || !f.g.has_edge(a, f.xp(j)) {
            continue;
        }
        let recipe = Recipe::SuccessorExchange;
        let cycle = Walk::on(&f.cycle)
            .fwd(f.xp(j), f.x(i))
            .then(f.u0)
            .bwd(f.x(j), a)
            .close(&f.g, recipe)?;
        return Ok(Some(Exchange {
            cycle,
            freed: f.xp(i),
            recipe,
        }));
    }
    Ok(None)
}

/// On the nine-vertex cycle `x_1 x_1^+ x_2^- x_2 x_2^+ x_3^- x_3 x_3^+ x_1^-`,
/// frees `x_i` via
/// `x_i^+ x_{i+2}^- x_{i+1}^+ x_i^- x_{i+2}^+ x_{i+2} u0 x_{i+1} x_{i+1}^-`.
pub fn hub_exchange(ctx: &SurgeryContext, i: usize) -> Result<Option<Exchange>, SurgeryError> {
    const OP: &str = "hub_exchange";
    let f = ctx.frame();
    let i = f.check_index(i)?;
    if f.m() != 3 || f.cycle.len() != 9 {
        return Err(SurgeryError::precondition(
            OP,
            "needs three hubs on a nine-vertex cycle",
        ));
    }
    if (1..=3).any(|j| f.cycle.step(f.x(j), 2) != f.xm(j + 1)) {
        return Err(SurgeryError::precondition(
            OP,
            "hubs are not spaced three apart",
        ));
    }
    let seq = vec![
        f.xp(i),
        f.xm(i + 2),
        f.xp(i + 1),
        f.xm(i),
        f.xp(i + 2),
        f.x(i + 2),
        f.u0,
        f.x(i + 1),
        f.xm(i + 1),
    ];
    let chords_present = seq
        .iter()
        .zip(seq.iter().cycle().skip(1))
        .all(|(&a, &b)| f.g.has_edge(a, b));
    if !chords_present {
        return Ok(None);
    }
    let recipe = Recipe::HubExchange;
    let cycle = close_sequence(&f.g, seq, recipe)?;
    Ok(Some(Exchange {
        cycle,
        freed: f.x(i),
        recipe,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::context::tests::c5_plus_hub;
    use super::*;
    use crate::graph::Graph;
    use crate::hamiltonicity::{longest_cycle, OrientedCycle};

    fn petersen_ctx() -> SurgeryContext {
        let g = Graph::petersen();
        let c = longest_cycle(&g).unwrap().unwrap();
        let u0 = (g.vertices() - c.vertex_set()).first().unwrap();
        SurgeryContext::new(&g, 3, &c, u0).unwrap()
    }

    #[test]
    fn exchange_through_consecutive_hub() {
        // C6 on 0..6 with u0 = 6 adjacent to 0 and 4: x_1^{-2} = 4 is a hub.
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (6, 0),
                (6, 4),
                (2, 5),
                (1, 3),
            ],
        )
        .unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let ctx = SurgeryContext::with_edge(&g, 2, &c, 6, (1, 2)).unwrap();
        assert_eq!(ctx.hubs(), &[4, 0]);
        let ex = degree_exchange(&ctx, 2).unwrap().unwrap();
        assert_eq!(ex.recipe, Recipe::PredecessorHubExchange);
        assert_eq!(ex.freed, 5);
        assert_eq!(ex.cycle.len(), c.len());
        assert!(!ex.cycle.contains(5) && ex.cycle.contains(6));
    }

    #[test]
    fn petersen_exchanges_validate() {
        let ctx = petersen_ctx();
        for i in 1..=3 {
            if let Some(ex) = degree_exchange(&ctx, i).unwrap() {
                assert!(ex.cycle.is_valid_in(ctx.graph()));
                assert_eq!(ex.cycle.len(), 9);
                assert!(!ex.cycle.contains(ex.freed));
            }
            for ex in [
                successor_exchange(&ctx, i).unwrap(),
                hub_exchange(&ctx, i).unwrap(),
            ] {
                let ex = ex.expect("the Petersen chords support both exchanges");
                assert!(ex.cycle.is_valid_in(ctx.graph()));
                assert_eq!(ex.cycle.len(), 9);
                assert!(!ex.cycle.contains(ex.freed) && ex.cycle.contains(ctx.u0()));
                assert_eq!(ctx.graph().degree(ex.freed), 3);
            }
        }
        assert_eq!(
            degree_exchange(&ctx, 4),
            Err(SurgeryError::InvalidIndex { index: 4, m: 3 })
        );
    }

    #[test]
    fn c5_exchanges() {
        // x_1 = 0: x_1^(-2) = 3 sees neither u0 nor x_2^- = 1.
        // x_2 = 2: x_2^(-2) = 0 is a hub, so 1 can be swapped out.
        let (g, c) = c5_plus_hub();
        let ctx = SurgeryContext::new(&g, 2, &c, 5).unwrap();
        assert_eq!(degree_exchange(&ctx, 1).unwrap(), None);
        let ex = degree_exchange(&ctx, 2).unwrap().unwrap();
        assert_eq!(ex.freed, 1);
        assert_eq!(ex.cycle.vertex_set(), [0, 2, 3, 4, 5].into_iter().collect());
    }

    #[test]
    fn late_neighbor_extends() {
        // C8 on 0..8, hub 8 adjacent to 0 and 4; extra chords make v see x_2^-.
        let mut g = Graph::cycle(8);
        g = Graph::from_edges(
            9,
            g.edges()
                .into_iter()
                .chain([(8, 0), (8, 4), (3, 6), (7, 5), (3, 5)]),
        )
        .unwrap();
        let c = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        let Ok(ctx) = SurgeryContext::new(&g, 2, &c, 8) else {
            return;
        };
        if let Some(l) = late_neighbor_splice(&ctx).unwrap() {
            assert!(l.cycle.is_valid_in(&g));
            assert!(l.cycle.len() > c.len());
        }
    }
}
