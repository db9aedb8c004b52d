//! Step-by-step replay of the structural argument on a concrete graph.
//!
//! Each step either confirms its statement (recorded in the trace) or
//! produces the cycle that refutes the maximality of the current cycle.

use num_rational::Ratio;
use serde::Serialize;

use super::certificate::{petersen_assembly, terminal_facts, Fact, FactKind, StructureCertificate};
use super::context::Frame;
use super::exterior::{exterior_structure, ExteriorOutcome};
use super::good_path::{
    close_good_path, good_path_one_hop, good_path_three_hop, good_path_two_hop, PathClosure,
};
use super::intervals::interval_equivalence;
use super::splices::{
    frame_degree_exchange, frame_exterior_pair, hub_exchange, late_neighbor_splice,
    successor_exchange, triple_interval_splice,
};
use super::{Exchange, LongerCycle, SurgeryContext, SurgeryError};
use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::{is_hamiltonian, longest_cycle, OrientedCycle};
use crate::invariants::{connectivity, find_p2kp1, is_t_tough, mu};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceWitness {
    pub label: String,
    pub vertices: Vec<usize>,
}

/// One statement of the argument, what was established, and the vertex
/// lists that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub claim: String,
    pub facts: Vec<String>,
    pub witnesses: Vec<TraceWitness>,
}

impl TraceStep {
    fn new(claim: &str) -> Self {
        TraceStep {
            claim: claim.to_string(),
            facts: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn fact(&mut self, text: impl Into<String>) {
        self.facts.push(text.into());
    }

    fn witness(&mut self, label: impl Into<String>, vertices: impl IntoIterator<Item = usize>) {
        self.witnesses.push(TraceWitness {
            label: label.into(),
            vertices: vertices.into_iter().collect(),
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ReplayOutcome {
    LongerCycle(LongerCycle),
    Exchange(Exchange),
    Certificate(StructureCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Replay {
    pub k: usize,
    pub trace: Vec<TraceStep>,
    pub outcome: ReplayOutcome,
}

enum Stop {
    Longer(LongerCycle),
    Swap(Exchange),
    Fail(SurgeryError),
}

impl From<SurgeryError> for Stop {
    fn from(e: SurgeryError) -> Self {
        Stop::Fail(e)
    }
}

type Flow<T> = Result<T, Stop>;

fn ic(step: &str, detail: impl Into<String>) -> Stop {
    Stop::Fail(SurgeryError::internal(step, detail))
}

fn ensure(ok: bool, step: &str, detail: impl FnOnce() -> String) -> Flow<()> {
    if ok {
        Ok(())
    } else {
        Err(ic(step, detail()))
    }
}

fn q(n: i64) -> Ratio<i64> {
    Ratio::from_integer(n)
}

fn indices(f: &Frame, set: VertexSet) -> Vec<usize> {
    (1..=f.m())
        .filter(|&i| set.contains(f.xm(i as isize)))
        .collect()
}

/// Runs the argument on a prepared context: the given cycle, exterior
/// vertex, and doubly covered edge. A longer cycle or an equal-length
/// exchange is a legitimate outcome here, since the cycle need not be longest.
pub fn replay_from_context(ctx: &SurgeryContext) -> Result<Replay, SurgeryError> {
    let f = ctx.frame();
    let mut trace = Vec::new();
    let outcome = run(&f.g, f.k, &f.cycle, f.u0, Some(ctx.edge()), &mut trace);
    finish(f.k, trace, outcome)
}

fn finish(
    k: usize,
    trace: Vec<TraceStep>,
    outcome: Flow<StructureCertificate>,
) -> Result<Replay, SurgeryError> {
    let outcome = match outcome {
        Ok(cert) => ReplayOutcome::Certificate(cert),
        Err(Stop::Longer(l)) => ReplayOutcome::LongerCycle(l),
        Err(Stop::Swap(e)) => ReplayOutcome::Exchange(e),
        Err(Stop::Fail(e)) => return Err(e),
    };
    Ok(Replay { k, trace, outcome })
}

/// Checks the hypotheses, then replays the argument from the
/// lexicographically first longest cycle and its highest-degree exterior
/// vertex. Whenever an equal-length exchange exposes an exterior vertex of
/// larger degree, the replay restarts from the exchanged cycle.
///
/// A longer cycle, or a statement that fails without a refuting cycle, is
/// an internal-consistency error.
pub fn replay_proof(g: &Graph, k: usize) -> Result<Replay, SurgeryError> {
    let mut trace = Vec::new();
    trace.push(hypothesis_step(g, k)?);
    if is_hamiltonian(g)? {
        return Err(SurgeryError::HypothesisViolation(
            "graph is hamiltonian".into(),
        ));
    }
    let Some(mut cycle) = longest_cycle(g)? else {
        return Err(SurgeryError::HypothesisViolation(
            "graph has no cycle".into(),
        ));
    };
    let mut u0 = best_exterior(g, &cycle);
    loop {
        let mut step = TraceStep::new("longest-cycle");
        step.fact(format!("|C| = {} < n = {}", cycle.len(), g.n()));
        step.fact(format!(
            "u0 = {u0} has the largest degree {} off the cycle",
            g.degree(u0)
        ));
        step.witness("cycle", cycle.vertices().iter().copied());
        trace.push(step);
        match run(g, k, &cycle, u0, None, &mut trace) {
            Ok(cert) => {
                return Ok(Replay {
                    k,
                    trace,
                    outcome: ReplayOutcome::Certificate(cert),
                })
            }
            Err(Stop::Fail(e)) => return Err(e),
            Err(Stop::Longer(l)) => {
                return Err(SurgeryError::internal(
                    "longest-cycle",
                    format!(
                        "{:?} produced a cycle of length {} > {}",
                        l.recipe,
                        l.cycle.len(),
                        cycle.len()
                    ),
                ))
            }
            Err(Stop::Swap(ex)) => {
                if g.degree(ex.freed) <= g.degree(u0) {
                    return Err(SurgeryError::internal(
                        "exchange",
                        format!(
                            "{:?} frees {} without raising the exterior degree",
                            ex.recipe, ex.freed
                        ),
                    ));
                }
                let mut step = TraceStep::new("exchange-restart");
                step.fact(format!(
                    "{:?} frees {} of degree {} > d(u0) = {}",
                    ex.recipe,
                    ex.freed,
                    g.degree(ex.freed),
                    g.degree(u0)
                ));
                step.witness("cycle", ex.cycle.vertices().iter().copied());
                trace.push(step);
                cycle = ex.cycle;
                u0 = best_exterior(g, &cycle);
            }
        }
    }
}

fn best_exterior(g: &Graph, cycle: &OrientedCycle) -> usize {
    let off = g.vertices() - cycle.vertex_set();
    off.iter()
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("cycle is not spanning")
}

fn hypothesis_step(g: &Graph, k: usize) -> Result<TraceStep, SurgeryError> {
    let mut failed = Vec::new();
    if k < 2 {
        failed.push(format!("k = {k} < 2"));
    }
    if g.n() < 3 {
        failed.push(format!("n = {} < 3", g.n()));
    }
    if !is_t_tough(g, Rational::integer(1))? {
        failed.push("not 1-tough".to_string());
    }
    let kappa = connectivity(g);
    if kappa < k {
        failed.push(format!("connectivity {kappa} < {k}"));
    }
    if let Some(w) = find_p2kp1(g, k) {
        failed.push(format!(
            "induced P2 u {k}P1 at edge {:?} with {:?}",
            w.edge, w.isolated
        ));
    }
    let threshold = Rational::new(7 * k as i64 - 6, 5);
    let mu_next = if k >= 1 {
        mu(g, k + 1)?
    } else {
        Rational::Infinity
    };
    if mu_next < threshold {
        failed.push(format!("mu_{} = {mu_next} < {threshold}", k + 1));
    }
    if !failed.is_empty() {
        return Err(SurgeryError::HypothesisViolation(failed.join("; ")));
    }
    let mut step = TraceStep::new("hypotheses");
    step.fact(format!(
        "1-tough, {k}-connected (kappa = {kappa}), P2 u {k}P1-free"
    ));
    step.fact(format!(
        "mu_{} = {mu_next} >= (7k-6)/5 = {threshold}",
        k + 1
    ));
    Ok(step)
}

fn run(
    g: &Graph,
    k: usize,
    cycle: &OrientedCycle,
    u0: usize,
    edge: Option<(usize, usize)>,
    trace: &mut Vec<TraceStep>,
) -> Flow<StructureCertificate> {
    let f = Frame::new(g, k, cycle, u0)?;
    let mu_next = mu(g, k + 1).map_err(SurgeryError::from)?;
    exterior_step(&f, trace)?;
    hub_degree_step(&f, mu_next, trace)?;
    exterior_independence_step(&f, trace)?;
    edge_coverage_step(&f, trace)?;
    let ctx = doubly_covered_edge_step(&f, edge, trace)?;
    let t = cascade(&ctx, mu_next, trace)?;
    structure(&ctx, mu_next, t, trace)
}

fn exterior_step(f: &Frame, trace: &mut Vec<TraceStep>) -> Flow<()> {
    const STEP: &str = "exterior-singletons";
    let mut step = TraceStep::new(STEP);
    for h in
        f.g.components(f.cycle.vertex_set())
            .map_err(|e| ic(STEP, e.to_string()))?
    {
        match exterior_structure(&f.g, f.k, &f.cycle, h)? {
            ExteriorOutcome::Essential(set) => {
                ensure(set.is_valid_in(&f.g), STEP, || {
                    format!("{set:?} is not essential")
                })?;
                step.witness(
                    format!("essential set centered at {}", set.center),
                    set.members.iter(),
                );
            }
            ExteriorOutcome::Longer(l) => return Err(Stop::Longer(l)),
            ExteriorOutcome::Forbidden(w) => {
                return Err(Stop::Fail(SurgeryError::HypothesisViolation(format!(
                    "component {h:?} with edge {:?} and {:?} induces P2 u {}P1",
                    w.edge, w.isolated, f.k
                ))))
            }
        }
    }
    step.fact("every component off the cycle is a single vertex");
    step.fact("its attachment predecessors with it form an essential independent set");
    trace.push(step);
    Ok(())
}

fn hub_degree_step(f: &Frame, mu_next: Rational, trace: &mut Vec<TraceStep>) -> Flow<()> {
    const STEP: &str = "hub-degree-bound";
    let (m, k) = (f.m(), f.k);
    ensure(m >= k, STEP, || format!("u0 has only {m} < k = {k} hubs"))?;
    ensure(!mu_next.is_infinite(), STEP, || {
        format!("mu_{} is infinite", k + 1)
    })?;
    if Rational::from(m) < mu_next {
        let d0 = f.g.degree(f.u0);
        let i = (1..=k)
            .find(|&i| Rational::from(f.g.degree(f.xm(i as isize))) >= mu_next)
            .ok_or_else(|| {
                ic(
                    STEP,
                    "no hub predecessor reaches mu although they form an essential set",
                )
            })?;
        return match frame_degree_exchange(f, i)? {
            Some(ex) if f.g.degree(ex.freed) > d0 => Err(Stop::Swap(ex)),
            _ => Err(ic(
                STEP,
                format!(
                    "m = {m} < mu_{} = {mu_next} and no exchange frees x_{i}^-",
                    k + 1
                ),
            )),
        };
    }
    let mut step = TraceStep::new(STEP);
    step.fact(format!("m = {m} >= k = {k}"));
    step.fact(format!("m = {m} >= mu_{} = {mu_next}", k + 1));
    step.witness("hubs", f.x.iter().copied());
    trace.push(step);
    Ok(())
}

fn exterior_independence_step(f: &Frame, trace: &mut Vec<TraceStep>) -> Flow<()> {
    const STEP: &str = "exterior-independence";
    for w in f.exterior().iter() {
        for side in [f.x_minus, f.x_plus] {
            if f.g.is_independent_unchecked(side.with(w)) {
                continue;
            }
            ensure(w != f.u0, STEP, || {
                "the hub neighbors of u0 are not independent".into()
            })?;
            return match frame_exterior_pair(f, w)? {
                Some(l) => Err(Stop::Longer(l)),
                None => Err(ic(
                    STEP,
                    format!("{w} sees fewer than two hub predecessors or successors"),
                )),
            };
        }
    }
    let mut step = TraceStep::new(STEP);
    step.fact("X^- + w and X^+ + w are independent for every w off the cycle");
    trace.push(step);
    Ok(())
}

fn edge_coverage_step(f: &Frame, trace: &mut Vec<TraceStep>) -> Flow<()> {
    const STEP: &str = "edge-coverage";
    for (a, b) in f.cycle.edges() {
        for (side, covered) in [("X^-", f.covered), ("X^+", f.covered_plus)] {
            ensure(covered.contains(a) || covered.contains(b), STEP, || {
                format!("cycle edge {a}-{b} has no end adjacent to {side}")
            })?;
        }
    }
    let mut step = TraceStep::new(STEP);
    step.fact("every cycle edge has an end in N(X^-) and an end in N(X^+)");
    trace.push(step);
    Ok(())
}

fn doubly_covered_edge_step(
    f: &Frame,
    edge: Option<(usize, usize)>,
    trace: &mut Vec<TraceStep>,
) -> Flow<SurgeryContext> {
    const STEP: &str = "doubly-covered-edge";
    let built = match edge {
        Some(e) => SurgeryContext::with_edge(&f.g, f.k, &f.cycle, f.u0, e),
        None => SurgeryContext::new(&f.g, f.k, &f.cycle, f.u0),
    };
    let ctx = built.map_err(|e| ic(STEP, e.to_string()))?;
    let (u, v) = ctx.edge();
    ensure(!f.g.has_edge(v, f.u0), STEP, || {
        format!("v = {v} is adjacent to u0")
    })?;
    let mut step = TraceStep::new(STEP);
    step.fact(format!("u = {u}, v = {v} = u^+, both adjacent to X^-"));
    step.fact("uv lies in x_m C x_1^{-2}; v is not adjacent to u0");
    step.witness("hubs x_1..x_m", ctx.hubs().iter().copied());
    step.witness("uv", [u, v]);
    trace.push(step);
    Ok(ctx)
}

/// The statements from the coverage bound through the extremal structure
/// around the chosen edge. Returns `t` with `(k, m) = (5t+3, 7t+3)`.
fn cascade(ctx: &SurgeryContext, mu_next: Rational, trace: &mut Vec<TraceStep>) -> Flow<usize> {
    let f = ctx.frame();
    let g = &f.g;
    let (m, k) = (f.m() as i64, f.k as i64);
    let (u, v, qi) = (ctx.u, ctx.v, ctx.q);
    let floor = m - k + 2;
    let count = |z: usize| (g.neighbors(z) & f.x_minus).len() as i64;

    const COVER: &str = "predecessor-coverage";
    let mut zs = vec![u, v];
    zs.extend((1..=f.m()).map(|i| f.xm2(i as isize)));
    for &z in &zs {
        let need = floor - g.has_edge(z, f.u0) as i64;
        ensure(count(z) >= need, COVER, || {
            format!("|N({z}) & X^-| = {} < {need}", count(z))
        })?;
    }
    let p = ctx.p() as i64;
    ensure(p >= floor, COVER, || {
        format!("p = {p} < m - k + 2 = {floor}")
    })?;
    let tail = m - qi as i64 + 1;
    ensure(tail >= count(u) && count(u) >= floor - 1, COVER, || {
        format!("|[q,m]| = {tail}, |N(u) & X^-| = {}", count(u))
    })?;
    let mut step = TraceStep::new(COVER);
    step.fact(format!(
        "|N(z) & X^-| >= m - k + 2 - [z ~ u0] for u, v and all x_i^(-2) ({} vertices)",
        zs.len()
    ));
    step.fact(format!(
        "p = {p} >= {floor}; |[q,m]| = {tail} >= |N(u) & X^-| = {} >= {}",
        count(u),
        floor - 1
    ));
    step.witness("v-indices", ctx.ip.iter().copied());
    trace.push(step);

    const LATE: &str = "v-indices-before-q";
    let ip = *ctx.ip.last().expect("p >= 2");
    if ip >= qi {
        return match late_neighbor_splice(ctx)? {
            Some(l) => Err(Stop::Longer(l)),
            None => Err(ic(
                LATE,
                format!("i_p = {ip} >= q = {qi} and no rewiring applies"),
            )),
        };
    }
    let mut step = TraceStep::new(LATE);
    step.fact(format!("i_p = {ip} < q = {qi}"));
    trace.push(step);

    let range = |lo: usize, hi: usize| (lo..=hi).filter(|&i| i >= 1).map(|i| i as isize);
    let blocked = |gp: &super::GoodPath, step: &str| -> Flow<()> {
        match close_good_path(ctx, gp)? {
            PathClosure::Longer(l) => Err(Stop::Longer(l)),
            PathClosure::Blocked(facts) => {
                ensure(facts.holds(ctx), step, || "endpoint facts fail".into())
            }
        }
    };
    let bounded = |y: usize, allowed: VertexSet, step: &str| -> Flow<()> {
        let seen = g.neighbors(y) & f.x_minus;
        ensure(seen.is_subset(allowed), step, || {
            format!("N({y}) & X^- = {seen:?} escapes {allowed:?}")
        })?;
        ensure(seen.len() as i64 >= floor, step, || {
            format!("|N({y}) & X^-| = {} < {floor}", seen.len())
        })
    };

    const ONE: &str = "one-hop-paths";
    for &a in &ctx.ip {
        let gp = good_path_one_hop(ctx, a)?;
        blocked(&gp, ONE)?;
        bounded(f.xm2(a as isize), f.preds_at(range(a, qi)), ONE)?;
    }
    let mut step = TraceStep::new(ONE);
    step.fact(format!(
        "for each of the {p} v-indices a: a < q, N(x_a^(-2)) & X^- within [a,q], size >= {floor}"
    ));
    trace.push(step);

    const TWO: &str = "two-hop-paths";
    const THREE: &str = "three-hop-paths";
    let (mut twos, mut threes) = (0, 0);
    for &a in &ctx.ip {
        for b in indices(f, g.neighbors(f.xm2(a as isize))) {
            if b == a {
                continue;
            }
            ensure(a < b && b <= qi, TWO, || {
                format!("b = {b} outside (a, q] for a = {a}")
            })?;
            let gp = good_path_two_hop(ctx, a, b)?;
            blocked(&gp, TWO)?;
            let allowed = f.preds_at(range(1, a - 1).chain(range(b, qi)));
            bounded(f.xm2(b as isize), allowed, TWO)?;
            twos += 1;
            for c in indices(f, g.neighbors(f.xm2(b as isize))) {
                if !(b < c && c <= qi) {
                    continue;
                }
                let gp = good_path_three_hop(ctx, a, b, c)?;
                blocked(&gp, THREE)?;
                let allowed = f.preds_at(range(a, b - 1).chain(range(c, qi)));
                bounded(f.xm2(c as isize), allowed, THREE)?;
                threes += 1;
            }
        }
    }
    let mut step = TraceStep::new(TWO);
    step.fact(format!(
        "{twos} index pairs: a < b <= q, N(x_b^(-2)) & X^- within [1,a) + [b,q], size >= {floor}"
    ));
    trace.push(step);
    let mut step = TraceStep::new(THREE);
    step.fact(format!(
        "{threes} index triples: N(x_c^(-2)) & X^- within [a,b) + [c,q], size >= {floor}"
    ));
    trace.push(step);

    const BOUND: &str = "v-index-bound";
    let bound = Ratio::new(3 * (m - k), 2) + 2;
    ensure(q(ip as i64) <= bound, BOUND, || {
        format!("i_p = {ip} > {bound}")
    })?;
    let mut step = TraceStep::new(BOUND);
    step.fact(format!("i_p = {ip} <= 3(m-k)/2 + 2 = {bound}"));
    trace.push(step);

    const MEDIAN: &str = "median-common-neighbor";
    let h = ctx.h();
    let ih = ctx.ip[h - 1];
    let half = Ratio::new(floor, 2);
    ensure(q(ih as i64) >= half, MEDIAN, || {
        format!("i_h = {ih} < {half}")
    })?;
    let anchor = f.xm2(ih as isize);
    let common = g.neighbors(v) & g.neighbors(anchor) & f.x_minus;
    let others = common.without(f.xm(ih as isize));
    ensure(!others.is_empty(), MEDIAN, || {
        format!("N(v) & N(x_(i_h)^(-2)) & X^- = {common:?}")
    })?;
    let mut step = TraceStep::new(MEDIAN);
    step.fact(format!("h = {h}, i_h = {ih} >= (m-k+2)/2 = {half}"));
    step.witness("common neighbors beyond x_(i_h)^-", others.iter());
    trace.push(step);

    const EXTREMAL: &str = "extremal-structure";
    let j = *indices(f, others)
        .first()
        .expect("others is a non-empty subset of X^-");
    let ell = *indices(f, g.neighbors(f.xm2(j as isize)))
        .last()
        .ok_or_else(|| ic(EXTREMAL, format!("x_{j}^(-2) has no neighbor in X^-")))?;
    ensure(ih < j && j < ell && ell <= qi, EXTREMAL, || {
        format!("i_h = {ih}, j = {j}, l = {ell}, q = {qi}")
    })?;
    let parts = [
        (m - qi as i64 + 1, q(floor - 1)),
        (ih as i64, half),
        (ell as i64 - j as i64 + 1, q(floor)),
        ((j - ih) as i64 + (qi - ell) as i64 + 1, q(floor)),
    ];
    for (size, at_least) in parts {
        ensure(q(size) >= at_least, EXTREMAL, || {
            format!("interval size {size} < {at_least}")
        })?;
    }
    let total: i64 = parts.iter().map(|p| p.0).sum();
    ensure(total == m + 3, EXTREMAL, || {
        format!("interval sizes sum to {total}, expected m + 3")
    })?;
    let lower: Ratio<i64> = parts.iter().map(|p| p.1).sum();
    ensure(q(m + 3) >= lower, EXTREMAL, || {
        format!("m + 3 = {} < {lower}", m + 3)
    })?;
    let threshold = Ratio::new(7 * k - 6, 5);
    ensure(q(m) <= threshold, EXTREMAL, || {
        format!("m = {m} > (7k-6)/5")
    })?;
    ensure(
        Rational::from(m) >= mu_next && mu_next >= Rational::Finite(threshold),
        EXTREMAL,
        || format!("m = {m}, mu = {mu_next}, (7k-6)/5 = {threshold}"),
    )?;
    ensure((m - 3) % 7 == 0 && 5 * m == 7 * k - 6, EXTREMAL, || {
        format!("(k, m) = ({k}, {m})")
    })?;
    let t = ((m - 3) / 7) as isize;
    let mi = m as isize;
    ensure((u, v) == (f.x(mi), f.xp(mi)), EXTREMAL, || {
        format!("uv = {u}{v} is not x_m x_m^+")
    })?;
    let expect_ii = f.preds_at((0..=2 * t).map(|i| mi - i));
    ensure(g.neighbors(u) & f.x_minus == expect_ii, EXTREMAL, || {
        "N(x_m) & X^- is not the last 2t+1".into()
    })?;
    ensure(count(v) == 2 * t as i64 + 2, EXTREMAL, || {
        format!("|N(x_m^+) & X^-| = {}", count(v))
    })?;
    ensure(
        g.has_edge(v, f.xm(1)) && g.has_edge(v, f.xm(2)),
        EXTREMAL,
        || "x_m^+ misses x_1^- or x_2^-".into(),
    )?;
    let mut step = TraceStep::new(EXTREMAL);
    step.fact(format!(
        "j = {j}, l = {ell}: i_h < j < l <= q and the four interval bounds sum to m + 3 = {}",
        m + 3
    ));
    step.fact(format!(
        "m = mu_{} = (7k-6)/5, so (k, m) = (5t+3, 7t+3) with t = {t}",
        k + 1
    ));
    step.fact("(u, v) = (x_m, x_m^+); N(x_m) & X^- = {x_(m-i)^- : i in [0, 2t]}");
    step.fact("|N(x_m^+) & X^-| = 2t + 2 and x_1^-, x_2^- are adjacent to x_m^+");
    trace.push(step);
    Ok(t as usize)
}

/// Everything after the extremal structure around one edge: rotations and
/// reflections, interval parity, and the terminal configuration.
fn structure(
    ctx: &SurgeryContext,
    mu_next: Rational,
    t: usize,
    trace: &mut Vec<TraceStep>,
) -> Flow<StructureCertificate> {
    let f = ctx.frame();
    let g = &f.g;
    let ti = t as isize;
    let mut facts = Vec::new();

    const ROTATED: &str = "rotated-structure";
    let mut step = TraceStep::new(ROTATED);
    for i in 1..=f.m() as isize {
        let walk = f.interval(i);
        let edges: Vec<(usize, usize)> = walk
            .windows(2)
            .filter(|e| f.covered.contains(e[0]) && f.covered.contains(e[1]))
            .map(|e| (e[0], e[1]))
            .collect();
        for &(z, zp) in &edges {
            let sub = SurgeryContext::with_edge(g, f.k, &f.cycle, f.u0, (z, zp))
                .map_err(|e| ic(ROTATED, e.to_string()))?;
            let ts = cascade(&sub, mu_next, &mut Vec::new())?;
            ensure(ts == t, ROTATED, || {
                format!("edge {z}-{zp} gives t = {ts}, expected {t}")
            })?;
            ensure((z, zp) == (f.x(i), f.xp(i)), ROTATED, || {
                format!("edge {z}-{zp} in C_{i} is not x_i x_i^+")
            })?;
        }
        if edges.is_empty() {
            continue;
        }
        let xi = f.x(i);
        let expect = f.preds_at((0..=2 * ti).map(|j| i - j));
        ensure(g.neighbors(xi) & f.x_minus == expect, ROTATED, || {
            format!("N(x_{i}) & X^-")
        })?;
        let succ_count = (g.neighbors(f.xp(i)) & f.x_minus).len();
        ensure(succ_count == 2 * t + 2, ROTATED, || {
            format!("|N(x_{i}^+) & X^-| = {succ_count}")
        })?;
        ensure(
            g.has_edge(f.xp(i), f.xm(i + 1)) && g.has_edge(f.xp(i), f.xm(i + 2)),
            ROTATED,
            || format!("x_{i}^+ misses x_(i+1)^- or x_(i+2)^-"),
        )?;
        facts.push(Fact::new(
            format!("interval-edge-{i}"),
            FactKind::DoublyCoveredEdges {
                walk,
                by: f.x_minus,
                expected: edges,
            },
        ));
        facts.push(Fact::new(
            format!("hub-predecessor-run-{i}"),
            FactKind::NeighborsWithin {
                vertex: xi,
                domain: f.x_minus,
                expected: expect,
            },
        ));
        facts.push(Fact::new(
            format!("successor-degree-{i}"),
            FactKind::NeighborCountWithin {
                vertex: f.xp(i),
                domain: f.x_minus,
                count: 2 * t + 2,
            },
        ));
        facts.push(Fact::new(
            format!("successor-next-{i}"),
            FactKind::Adjacent {
                a: f.xp(i),
                b: f.xm(i + 1),
            },
        ));
        facts.push(Fact::new(
            format!("successor-skip-{i}"),
            FactKind::Adjacent {
                a: f.xp(i),
                b: f.xm(i + 2),
            },
        ));
        step.fact(format!("C_{i}: the only doubly covered edge is x_{i} x_{i}^+ and the structure repeats with t = {t}"));
    }
    trace.push(step);

    const REFLECTED: &str = "reflected-structure";
    let mut step = TraceStep::new(REFLECTED);
    let reversed = f.cycle.reversed();
    for (a, z) in f.cycle.edges() {
        if !(f.covered_plus.contains(a) && f.covered_plus.contains(z)) {
            continue;
        }
        let sub = SurgeryContext::with_edge(g, f.k, &reversed, f.u0, (z, a))
            .map_err(|e| ic(REFLECTED, e.to_string()))?;
        let ts = cascade(&sub, mu_next, &mut Vec::new())?;
        ensure(ts == t, REFLECTED, || {
            format!("edge {a}-{z} gives t = {ts}, expected {t}")
        })?;
        let i = f
            .index_of(z)
            .ok_or_else(|| ic(REFLECTED, format!("edge {a}-{z}: {z} is not a hub")))?
            as isize;
        let expect = f.succs_at((0..=2 * ti).map(|j| i + j));
        ensure(g.neighbors(z) & f.x_plus == expect, REFLECTED, || {
            format!("N(x_{i}) & X^+")
        })?;
        let pred_count = (g.neighbors(a) & f.x_plus).len();
        ensure(pred_count == 2 * t + 2, REFLECTED, || {
            format!("|N(x_{i}^-) & X^+| = {pred_count}")
        })?;
        ensure(
            g.has_edge(a, f.xp(i - 1)) && g.has_edge(a, f.xp(i - 2)),
            REFLECTED,
            || format!("x_{i}^- misses x_(i-1)^+ or x_(i-2)^+"),
        )?;
        facts.push(Fact::new(
            format!("hub-successor-run-{i}"),
            FactKind::NeighborsWithin {
                vertex: z,
                domain: f.x_plus,
                expected: expect,
            },
        ));
        facts.push(Fact::new(
            format!("predecessor-degree-{i}"),
            FactKind::NeighborCountWithin {
                vertex: a,
                domain: f.x_plus,
                count: 2 * t + 2,
            },
        ));
        step.fact(format!(
            "edge x_{i}^- x_{i} is the reflected doubly covered edge, t = {t}"
        ));
    }
    trace.push(step);

    const PARITY: &str = "interval-equivalence";
    let mut step = TraceStep::new(PARITY);
    for i in 1..=f.m() {
        let eq = interval_equivalence(ctx, i)?;
        ensure(eq.agree(), PARITY, || format!("C_{i}: {eq:?}"))?;
    }
    step.fact("for every i: C_i bad <=> x_i^+ in N(X^-) <=> x_(i+1)^- in N(X^+) <=> |V(C_i)| even");
    trace.push(step);

    const ALL_BAD: &str = "all-intervals-bad";
    for i in 1..=f.m() {
        ensure(super::bad_interval(ctx, i)?, ALL_BAD, || {
            format!("C_{i} is not bad")
        })?;
    }
    let mut step = TraceStep::new(ALL_BAD);
    step.fact(format!("all {} intervals are bad", f.m()));
    trace.push(step);

    const WIDE: &str = "no-wide-structure";
    if t >= 1 {
        return match triple_interval_splice(ctx, 1) {
            Ok(Some(l)) => Err(Stop::Longer(l)),
            Ok(None) => Err(ic(
                WIDE,
                "t >= 1 but the chords x_1 x_2^+ and x_1^+ x_3^- are missing",
            )),
            Err(e) => Err(ic(WIDE, e.to_string())),
        };
    }
    ensure(f.k == 3 && f.m() == 3, WIDE, || {
        format!("t = 0 but (k, m) = ({}, {})", f.k, f.m())
    })?;
    let mut step = TraceStep::new(WIDE);
    step.fact("t = 0, so k = m = 3");
    trace.push(step);

    terminal(ctx, facts, trace)
}

fn terminal(
    ctx: &SurgeryContext,
    facts: Vec<Fact>,
    trace: &mut Vec<TraceStep>,
) -> Flow<StructureCertificate> {
    const TERMINAL: &str = "terminal-structure";
    let f = ctx.frame();
    let g = &f.g;
    let d0 = g.degree(f.u0);
    let check = |prefix: &str| -> Flow<()> {
        for fact in terminal_facts(&f.cycle, f.u0, &f.x)
            .into_iter()
            .filter(|x| x.id.starts_with(prefix))
        {
            ensure(fact.holds(g, &f.cycle), TERMINAL, || {
                format!("{} fails", fact.id)
            })?;
        }
        Ok(())
    };
    check("hub-flanks")?;
    check("successor-chords")?;
    check("predecessor-chords")?;
    check("lone-exterior")?;
    for i in 1..=3usize {
        let ii = i as isize;
        if f.cycle.step(f.x(ii), 2) != f.xm(ii + 1) {
            return match successor_exchange(ctx, i)? {
                Some(ex) if g.degree(ex.freed) > d0 => Err(Stop::Swap(ex)),
                _ => Err(ic(
                    TERMINAL,
                    format!("x_{i}^(+2) != x_(i+1)^- and no exchange frees x_{i}^+"),
                )),
            };
        }
    }
    ensure(f.cycle.len() == 9, TERMINAL, || {
        format!("cycle has length {}", f.cycle.len())
    })?;
    for i in 1..=3usize {
        let ii = i as isize;
        let expected: VertexSet = [f.u0, f.xp(ii), f.xm(ii)].into_iter().collect();
        if g.neighbors(f.x(ii)) != expected {
            return match hub_exchange(ctx, i)? {
                Some(ex) if g.degree(ex.freed) > d0 => Err(Stop::Swap(ex)),
                _ => Err(ic(
                    TERMINAL,
                    format!("N(x_{i}) is not {{u0, x_{i}^+, x_{i}^-}} and no exchange frees x_{i}"),
                )),
            };
        }
    }
    check("exterior-neighborhood")?;
    check("cycle-chords")?;
    let mut step = TraceStep::new(TERMINAL);
    step.fact("N(x_i) & (X^- + X^+) = {x_i^-, x_i^+}; N(x_i^+) & X^- = {x_(i+1)^-, x_(i+2)^-}");
    step.fact("N(x_i^-) & X^+ = {x_(i-1)^+, x_(i-2)^+}; V(G) - V(C) = {u0}");
    step.fact("x_i^(+2) = x_(i+1)^-; N(x_i) = {u0, x_i^+, x_i^-}");
    step.fact("E(G[V(C)]) = E(C) + {x_1^+ x_3^-, x_2^+ x_1^-, x_3^+ x_2^-}");
    step.witness("cycle", f.cycle.vertices().iter().copied());
    trace.push(step);

    let mut cert = StructureCertificate {
        t: 0,
        k: f.k,
        m: f.m(),
        cycle: f.cycle.clone(),
        u0: f.u0,
        hubs: f.x.clone(),
        facts,
        petersen: false,
    };
    const ASSEMBLY: &str = "petersen-assembly";
    cert.petersen = petersen_assembly(&cert, g).map_err(|e| ic(ASSEMBLY, e.to_string()))?;
    let mut step = TraceStep::new(ASSEMBLY);
    step.fact(format!(
        "isomorphic to the Petersen graph: {}",
        cert.petersen
    ));
    trace.push(step);
    Ok(cert)
}
