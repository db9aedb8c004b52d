//! Hamiltonian paths of `G[V(C)]` starting at `x_q`, and the cycles they
//! close into when their endpoint sees `u0` or a hub predecessor.

use serde::Serialize;

use super::walk::{close_sequence, Walk};
use super::{LongerCycle, Recipe, SurgeryContext, SurgeryError};
use crate::graph::VertexSet;

/// A Hamiltonian path of the subgraph induced by the cycle, with the
/// stretches `(z, w)` it traverses exactly as the cycle does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodPath {
    pub path: Vec<usize>,
    pub segments: Vec<(usize, usize)>,
    pub recipe: Recipe,
}

impl GoodPath {
    pub fn endpoint(&self) -> usize {
        *self.path.last().expect("good paths are non-empty")
    }

    /// Checks every defining property against the context.
    pub fn check(&self, ctx: &SurgeryContext) -> Result<(), String> {
        let (g, c) = (ctx.graph(), ctx.cycle());
        if self.path.len() != c.len() {
            return Err(format!(
                "path has {} vertices, cycle has {}",
                self.path.len(),
                c.len()
            ));
        }
        let seen: VertexSet = self.path.iter().copied().collect();
        if seen != c.vertex_set() {
            return Err("path does not visit exactly the cycle's vertices".into());
        }
        if let Some(w) = self.path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(format!("{} and {} are not adjacent", w[0], w[1]));
        }
        if self.path[0] != ctx.x(ctx.q() as isize) {
            return Err("path does not start at x_q".into());
        }
        for &(z, w) in &self.segments {
            let pz = self.index(z).ok_or("segment start is off the path")?;
            let stretch = c.segment(z, w);
            if self.path.get(pz..pz + stretch.len()) != Some(&stretch[..]) {
                return Err(format!("C[{z},{w}] is not traversed in cycle order"));
            }
        }
        Ok(())
    }

    fn index(&self, v: usize) -> Option<usize> {
        self.path.iter().position(|&p| p == v)
    }
}

fn built(ctx: &SurgeryContext, gp: GoodPath) -> Result<GoodPath, SurgeryError> {
    gp.check(ctx)
        .map_err(|detail| SurgeryError::InvalidSplice {
            recipe: gp.recipe,
            detail,
        })?;
    Ok(gp)
}

fn require(ok: bool, op: &'static str, what: &str) -> Result<(), SurgeryError> {
    if ok {
        Ok(())
    } else {
        Err(SurgeryError::precondition(op, what))
    }
}

/// `x_q C u x_q^- <-C x_a^- v C x_a^{-2}`, good segments `C[x_q,u]` and
/// `C[v,x_a^{-2}]`. Requires `x_a^- in N(v)` and `a < q`.
pub fn good_path_one_hop(ctx: &SurgeryContext, a: usize) -> Result<GoodPath, SurgeryError> {
    const OP: &str = "good_path_one_hop";
    let f = ctx.frame();
    let a = f.check_index(a)?;
    let (u, v, q) = (ctx.u, ctx.v, ctx.q as isize);
    require(f.g.has_edge(v, f.xm(a)), OP, "x_a^- is not adjacent to v")?;
    require(a < q, OP, "a is not below q")?;
    let path = Walk::on(&f.cycle)
        .fwd(f.x(q), u)
        .bwd(f.xm(q), f.xm(a))
        .fwd(v, f.xm2(a))
        .into_vec();
    built(
        ctx,
        GoodPath {
            path,
            segments: vec![(f.x(q), u), (v, f.xm2(a))],
            recipe: Recipe::OneHopPath,
        },
    )
}

/// `x_q C u x_q^- <-C x_b^- x_a^{-2} <-C v x_a^- C x_b^{-2}`, good segments
/// `C[x_q,u]` and `C[x_a^-,x_b^{-2}]`. Requires `x_a^- in N(v)`,
/// `x_b^- in N(x_a^{-2})` and `a < b <= q`.
pub fn good_path_two_hop(
    ctx: &SurgeryContext,
    a: usize,
    b: usize,
) -> Result<GoodPath, SurgeryError> {
    const OP: &str = "good_path_two_hop";
    let f = ctx.frame();
    let (a, b) = (f.check_index(a)?, f.check_index(b)?);
    let (u, v, q) = (ctx.u, ctx.v, ctx.q as isize);
    require(f.g.has_edge(v, f.xm(a)), OP, "x_a^- is not adjacent to v")?;
    require(
        f.g.has_edge(f.xm2(a), f.xm(b)),
        OP,
        "x_b^- is not adjacent to x_a^{-2}",
    )?;
    require(a < b && b <= q, OP, "indices are not ordered a < b <= q")?;
    let path = Walk::on(&f.cycle)
        .fwd(f.x(q), u)
        .bwd(f.xm(q), f.xm(b))
        .bwd(f.xm2(a), v)
        .fwd(f.xm(a), f.xm2(b))
        .into_vec();
    built(
        ctx,
        GoodPath {
            path,
            segments: vec![(f.x(q), u), (f.xm(a), f.xm2(b))],
            recipe: Recipe::TwoHopPath,
        },
    )
}

/// `x_q C u x_q^- <-C x_c^- x_b^{-2} <-C x_a^- v C x_a^{-2} x_b^- C x_c^{-2}`,
/// good segments `C[x_q,u]`, `C[v,x_a^{-2}]` and `C[x_b^-,x_c^{-2}]`.
/// Requires `x_a^- in N(v)`, `x_b^- in N(x_a^{-2})`, `x_c^- in N(x_b^{-2})`
/// and `a < b < c <= q`.
pub fn good_path_three_hop(
    ctx: &SurgeryContext,
    a: usize,
    b: usize,
    c: usize,
) -> Result<GoodPath, SurgeryError> {
    const OP: &str = "good_path_three_hop";
    let f = ctx.frame();
    let (a, b, c) = (f.check_index(a)?, f.check_index(b)?, f.check_index(c)?);
    let (u, v, q) = (ctx.u, ctx.v, ctx.q as isize);
    require(f.g.has_edge(v, f.xm(a)), OP, "x_a^- is not adjacent to v")?;
    require(
        f.g.has_edge(f.xm2(a), f.xm(b)),
        OP,
        "x_b^- is not adjacent to x_a^{-2}",
    )?;
    require(
        f.g.has_edge(f.xm2(b), f.xm(c)),
        OP,
        "x_c^- is not adjacent to x_b^{-2}",
    )?;
    require(
        a < b && b < c && c <= q,
        OP,
        "indices are not ordered a < b < c <= q",
    )?;
    let path = Walk::on(&f.cycle)
        .fwd(f.x(q), u)
        .bwd(f.xm(q), f.xm(c))
        .bwd(f.xm2(b), f.xm(a))
        .fwd(v, f.xm2(a))
        .fwd(f.xm(b), f.xm2(c))
        .into_vec();
    built(
        ctx,
        GoodPath {
            path,
            segments: vec![(f.x(q), u), (v, f.xm2(a)), (f.xm(b), f.xm2(c))],
            recipe: Recipe::ThreeHopPath,
        },
    )
}

/// What a good path's endpoint `y` is barred from seeing when the path
/// cannot be closed: `u0`, and every hub predecessor in `C[z,w)` over the
/// good segments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointFacts {
    pub endpoint: usize,
    pub guarded: VertexSet,
}

impl EndpointFacts {
    pub fn holds(&self, ctx: &SurgeryContext) -> bool {
        let g = ctx.graph();
        !g.has_edge(self.endpoint, ctx.u0()) && !g.neighbors(self.endpoint).intersects(self.guarded)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathClosure {
    Longer(LongerCycle),
    Blocked(EndpointFacts),
}

/// Closes a good path into a longer cycle through `u0` if its endpoint
/// allows it; otherwise reports the endpoint facts.
pub fn close_good_path(ctx: &SurgeryContext, gp: &GoodPath) -> Result<PathClosure, SurgeryError> {
    gp.check(ctx)
        .map_err(|d| SurgeryError::precondition("close_good_path", d))?;
    let (g, c, u0) = (ctx.graph(), ctx.cycle(), ctx.u0());
    let y = gp.endpoint();
    if g.has_edge(y, u0) {
        let recipe = Recipe::PathHubClosure;
        let cycle = close_sequence(g, gp.path.iter().copied().chain([u0]).collect(), recipe)?;
        return Ok(PathClosure::Longer(LongerCycle { cycle, recipe }));
    }
    let mut guarded = VertexSet::EMPTY;
    for &(z, w) in &gp.segments {
        let stretch = c.segment(z, w);
        guarded = guarded
            | (stretch[..stretch.len() - 1]
                .iter()
                .copied()
                .collect::<VertexSet>()
                & ctx.x_minus());
    }
    for &(z, w) in &gp.segments {
        let stretch = c.segment(z, w);
        for &xm in &stretch[..stretch.len() - 1] {
            if !ctx.x_minus().contains(xm) || !g.has_edge(xm, y) {
                continue;
            }
            let at = gp.index(xm).expect("segment lies on the path");
            let mut seq = gp.path[..=at].to_vec();
            seq.extend(gp.path[at + 1..].iter().rev());
            seq.push(u0);
            let recipe = Recipe::PathSegmentClosure;
            let cycle = close_sequence(g, seq, recipe)?;
            return Ok(PathClosure::Longer(LongerCycle { cycle, recipe }));
        }
    }
    Ok(PathClosure::Blocked(EndpointFacts {
        endpoint: y,
        guarded,
    }))
}
