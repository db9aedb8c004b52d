use super::SurgeryError;
use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::OrientedCycle;

/// A cycle, an exterior vertex `u0`, and its hubs `x_1..x_m` in cycle order.
#[derive(Debug, Clone)]
pub(crate) struct Frame {
    pub(crate) g: Graph,
    pub(crate) k: usize,
    pub(crate) cycle: OrientedCycle,
    pub(crate) u0: usize,
    pub(crate) x: Vec<usize>,
    pub(crate) hubs: VertexSet,
    pub(crate) x_minus: VertexSet,
    pub(crate) x_plus: VertexSet,
    /// `N(X^-)`
    pub(crate) covered: VertexSet,
    /// `N(X^+)`
    pub(crate) covered_plus: VertexSet,
}

impl Frame {
    pub(crate) fn new(
        g: &Graph,
        k: usize,
        cycle: &OrientedCycle,
        u0: usize,
    ) -> Result<Self, SurgeryError> {
        if k == 0 {
            return Err(SurgeryError::InvalidContext("k must be at least 1".into()));
        }
        OrientedCycle::new(g, cycle.vertices().to_vec())?;
        if u0 >= g.n() || cycle.contains(u0) {
            return Err(SurgeryError::InvalidContext(format!(
                "u0 = {u0} is not an exterior vertex"
            )));
        }
        let hubs = g.neighbors(u0) & cycle.vertex_set();
        if hubs.is_empty() {
            return Err(SurgeryError::InvalidContext(format!(
                "u0 = {u0} has no neighbor on the cycle"
            )));
        }
        let x: Vec<usize> = cycle
            .vertices()
            .iter()
            .copied()
            .filter(|&v| hubs.contains(v))
            .collect();
        let x_minus = cycle.preds(hubs);
        let x_plus = cycle.succs(hubs);
        Ok(Frame {
            g: g.clone(),
            k,
            cycle: cycle.clone(),
            u0,
            x,
            hubs,
            x_minus,
            x_plus,
            covered: g.neighbors_of_set(x_minus),
            covered_plus: g.neighbors_of_set(x_plus),
        })
    }

    pub(crate) fn m(&self) -> usize {
        self.x.len()
    }

    /// Relabels so that `last` becomes `x_m`.
    pub(crate) fn relabeled(&self, last: usize) -> Frame {
        let at = self
            .x
            .iter()
            .position(|&v| v == last)
            .expect("relabel target is a hub");
        let mut f = self.clone();
        f.x.rotate_left((at + 1) % self.m());
        f
    }

    pub(crate) fn x(&self, i: isize) -> usize {
        self.x[(i - 1).rem_euclid(self.m() as isize) as usize]
    }

    pub(crate) fn xm(&self, i: isize) -> usize {
        self.cycle.pred(self.x(i))
    }

    pub(crate) fn xm2(&self, i: isize) -> usize {
        self.cycle.pred2(self.x(i))
    }

    pub(crate) fn xp(&self, i: isize) -> usize {
        self.cycle.succ(self.x(i))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<isize, SurgeryError> {
        if (1..=self.m()).contains(&i) {
            Ok(i as isize)
        } else {
            Err(SurgeryError::InvalidIndex {
                index: i,
                m: self.m(),
            })
        }
    }

    /// 1-based index of hub `v`.
    pub(crate) fn index_of(&self, v: usize) -> Option<usize> {
        self.x.iter().position(|&h| h == v).map(|i| i + 1)
    }

    /// 1-based indices `i` with `x_i^- in N(z)`, increasing.
    pub(crate) fn pred_indices(&self, z: usize) -> Vec<usize> {
        (1..=self.m())
            .filter(|&i| self.g.has_edge(z, self.xm(i as isize)))
            .collect()
    }

    /// Index of the last hub at or before `z` along the orientation.
    pub(crate) fn interval_of(&self, z: usize) -> usize {
        let mut w = z;
        loop {
            if let Some(i) = self.index_of(w) {
                return i;
            }
            w = self.cycle.pred(w);
        }
    }

    /// `C_i = x_i C x_{i+1}`; with a single hub this is the whole cycle,
    /// closing back at `x_1`.
    pub(crate) fn interval(&self, i: isize) -> Vec<usize> {
        let (a, b) = (self.x(i), self.x(i + 1));
        let mut steps = self.cycle.offset(a, b);
        if steps == 0 {
            steps = self.cycle.len();
        }
        (0..=steps as isize)
            .map(|s| self.cycle.step(a, s))
            .collect()
    }

    /// Vertices of the graph off the cycle.
    pub(crate) fn exterior(&self) -> VertexSet {
        self.g.vertices() - self.cycle.vertex_set()
    }

    /// `{x_i^- : i in idx}`
    pub(crate) fn preds_at(&self, idx: impl IntoIterator<Item = isize>) -> VertexSet {
        idx.into_iter().map(|i| self.xm(i)).collect()
    }

    /// `{x_i^+ : i in idx}`
    pub(crate) fn succs_at(&self, idx: impl IntoIterator<Item = isize>) -> VertexSet {
        idx.into_iter().map(|i| self.xp(i)).collect()
    }
}

/// The full working state: a [`Frame`] relabeled so that the chosen edge
/// `uv` (both ends adjacent to `X^-`, `v = u^+`) lies in `x_m C x_1^{-2}`.
#[derive(Debug, Clone)]
pub struct SurgeryContext {
    pub(crate) f: Frame,
    pub(crate) u: usize,
    pub(crate) v: usize,
    pub(crate) q: usize,
    pub(crate) ip: Vec<usize>,
}

impl SurgeryContext {
    /// Builds a context from any cycle of `g` and any exterior vertex `u0`
    /// with a neighbor on it. The edge `uv` is the first one, scanning from
    /// the last hub along the orientation, with both ends in `N(X^-)` and
    /// `v` not in `{x_1, x_1^-}` after relabeling.
    pub fn new(
        g: &Graph,
        k: usize,
        cycle: &OrientedCycle,
        u0: usize,
    ) -> Result<Self, SurgeryError> {
        let f = Frame::new(g, k, cycle, u0)?;
        let start = f.x(f.m() as isize);
        for s in 0..cycle.len() as isize {
            let z = cycle.step(start, s);
            if Self::admissible(&f, z) {
                return Self::from_frame(f, z);
            }
        }
        Err(SurgeryError::InvalidContext(
            "no cycle edge has both ends adjacent to X^-".into(),
        ))
    }

    /// Builds a context around the given edge `(u, u^+)`.
    pub fn with_edge(
        g: &Graph,
        k: usize,
        cycle: &OrientedCycle,
        u0: usize,
        edge: (usize, usize),
    ) -> Result<Self, SurgeryError> {
        let f = Frame::new(g, k, cycle, u0)?;
        let (u, v) = edge;
        if !cycle.contains(u) || cycle.succ(u) != v {
            return Err(SurgeryError::InvalidContext(format!(
                "({u}, {v}) is not an oriented cycle edge"
            )));
        }
        if !Self::admissible(&f, u) {
            return Err(SurgeryError::InvalidContext(format!(
                "({u}, {v}) is not a doubly covered edge clear of the next hub"
            )));
        }
        Self::from_frame(f, u)
    }

    fn admissible(f: &Frame, u: usize) -> bool {
        let v = f.cycle.succ(u);
        f.covered.contains(u)
            && f.covered.contains(v)
            && !f.hubs.contains(v)
            && !f.hubs.contains(f.cycle.succ(v))
    }

    fn from_frame(f: Frame, u: usize) -> Result<Self, SurgeryError> {
        let v = f.cycle.succ(u);
        let f = f.relabeled(f.x[f.interval_of(u) - 1]);
        let q = *f.pred_indices(u).first().expect("u is adjacent to X^-");
        let ip = f.pred_indices(v);
        Ok(SurgeryContext { f, u, v, q, ip })
    }

    pub fn graph(&self) -> &Graph {
        &self.f.g
    }

    pub fn k(&self) -> usize {
        self.f.k
    }

    pub fn cycle(&self) -> &OrientedCycle {
        &self.f.cycle
    }

    pub fn u0(&self) -> usize {
        self.f.u0
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    /// `x_1..x_m`
    pub fn hubs(&self) -> &[usize] {
        &self.f.x
    }

    /// `x_i`, index taken modulo `m`.
    pub fn x(&self, i: isize) -> usize {
        self.f.x(i)
    }

    pub fn x_minus(&self) -> VertexSet {
        self.f.x_minus
    }

    pub fn x_plus(&self) -> VertexSet {
        self.f.x_plus
    }

    /// `(u, v)` with `v = u^+`.
    pub fn edge(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// `min{i : x_i^- in N(u)}`
    pub fn q(&self) -> usize {
        self.q
    }

    /// `i_1 < ... < i_p`: the indices with `x_i^- in N(v)`.
    pub fn v_indices(&self) -> &[usize] {
        &self.ip
    }

    pub fn p(&self) -> usize {
        self.ip.len()
    }

    /// `ceil(p / 2)`
    pub fn h(&self) -> usize {
        self.ip.len().div_ceil(2)
    }

    pub(crate) fn frame(&self) -> &Frame {
        &self.f
    }
}
