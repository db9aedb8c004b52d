use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} is not in the graph")]
    OutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
}

/// A cycle of a host graph with a fixed traversal direction.
///
/// `order[i + 1]` is the successor of `order[i]`, cyclically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrientedCycle {
    order: Vec<usize>,
    pos: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

impl OrientedCycle {
    /// Validates `order` as a cycle of `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, CycleError> {
        if order.len() < 3 {
            return Err(CycleError::TooShort(order.len()));
        }
        let mut pos = vec![ABSENT; g.n()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.n() {
                return Err(CycleError::OutOfRange(v));
            }
            if pos[v] != ABSENT {
                return Err(CycleError::Repeated(v));
            }
            pos[v] = i as u32;
        }
        for i in 0..order.len() {
            let (a, b) = (order[i], order[(i + 1) % order.len()]);
            if !g.has_edge(a, b) {
                return Err(CycleError::MissingEdge(a, b));
            }
        }
        Ok(OrientedCycle { order, pos })
    }

    /// Re-checks every cycle invariant against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        OrientedCycle::new(g, self.order.clone()).is_ok()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.order
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.pos.len() && self.pos[v] != ABSENT
    }

    #[inline]
    pub fn position(&self, v: usize) -> Option<usize> {
        self.contains(v).then(|| self.pos[v] as usize)
    }

    #[inline]
    fn index(&self, v: usize) -> usize {
        let p = self.pos[v];
        assert!(p != ABSENT, "vertex {v} is not on the cycle");
        p as usize
    }

    /// The vertex `steps` places after `v` along the orientation (negative: before).
    pub fn step(&self, v: usize, steps: isize) -> usize {
        let len = self.order.len() as isize;
        let i = (self.index(v) as isize + steps).rem_euclid(len);
        self.order[i as usize]
    }

    /// `x^+`
    pub fn succ(&self, v: usize) -> usize {
        self.step(v, 1)
    }

    /// `x^-`
    pub fn pred(&self, v: usize) -> usize {
        self.step(v, -1)
    }

    /// `x^{-2}`
    pub fn pred2(&self, v: usize) -> usize {
        self.step(v, -2)
    }

    /// Number of steps from `from` forward to `to`, in `0..len`.
    pub fn offset(&self, from: usize, to: usize) -> usize {
        let len = self.order.len();
        (self.index(to) + len - self.index(from)) % len
    }

    /// `C[z, w]`: the vertices from `z` forward to `w`, inclusive.
    pub fn segment(&self, z: usize, w: usize) -> Vec<usize> {
        (0..=self.offset(z, w) as isize)
            .map(|s| self.step(z, s))
            .collect()
    }

    /// `C[z, w]` read backwards: from `z` against the orientation down to `w`.
    pub fn segment_rev(&self, z: usize, w: usize) -> Vec<usize> {
        (0..=self.offset(w, z) as isize)
            .map(|s| self.step(z, -s))
            .collect()
    }

    /// `X^-` for `X` on the cycle.
    pub fn preds(&self, xs: VertexSet) -> VertexSet {
        xs.iter().map(|x| self.pred(x)).collect()
    }

    /// `X^+` for `X` on the cycle.
    pub fn succs(&self, xs: VertexSet) -> VertexSet {
        xs.iter().map(|x| self.succ(x)).collect()
    }

    /// Edges `(x, x^+)` in traversal order starting at `order[0]`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order.len()).map(move |i| (self.order[i], self.order[(i + 1) % self.order.len()]))
    }

    pub fn has_cycle_edge(&self, a: usize, b: usize) -> bool {
        self.contains(a) && self.contains(b) && (self.succ(a) == b || self.succ(b) == a)
    }

    /// Same cycle, opposite direction, same starting vertex.
    pub fn reversed(&self) -> Self {
        let mut order = Vec::with_capacity(self.order.len());
        order.push(self.order[0]);
        order.extend(self.order[1..].iter().rev());
        self.relabeled(order)
    }

    /// Same cycle and direction, starting at `v`.
    pub fn rotated_to(&self, v: usize) -> Self {
        let i = self.index(v);
        let mut order = self.order[i..].to_vec();
        order.extend_from_slice(&self.order[..i]);
        self.relabeled(order)
    }

    /// Canonical form: starts at its smallest vertex, heading toward the
    /// smaller of that vertex's two cycle neighbors.
    pub fn normalized(&self) -> Self {
        let min = *self.order.iter().min().unwrap();
        let c = self.rotated_to(min);
        if c.order[1] > *c.order.last().unwrap() {
            c.reversed()
        } else {
            c
        }
    }

    fn relabeled(&self, order: Vec<usize>) -> Self {
        let mut pos = vec![ABSENT; self.pos.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i as u32;
        }
        OrientedCycle { order, pos }
    }
}

impl Serialize for OrientedCycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.order.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn navigation() {
        let g = Graph::cycle(6);
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.succ(5), 0);
        assert_eq!(c.pred(0), 5);
        assert_eq!(c.pred2(1), 5);
        assert_eq!(c.segment(4, 1), vec![4, 5, 0, 1]);
        assert_eq!(c.segment_rev(1, 4), vec![1, 0, 5, 4]);
        assert_eq!(c.segment(2, 2), vec![2]);
        assert_eq!(c.offset(4, 1), 3);
        let xs: VertexSet = [0, 3].into_iter().collect();
        assert_eq!(c.preds(xs).to_vec(), vec![2, 5]);
        assert_eq!(c.succs(xs).to_vec(), vec![1, 4]);
        let r = c.reversed();
        assert_eq!(r.vertices(), &[0, 5, 4, 3, 2, 1]);
        assert_eq!(r.succ(0), 5);
        assert_eq!(c.rotated_to(3).vertices(), &[3, 4, 5, 0, 1, 2]);
        assert_eq!(r.rotated_to(2).normalized(), c);
    }

    #[test]
    fn rejects_invalid() {
        let g = Graph::cycle(6);
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1]),
            Err(CycleError::TooShort(2))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 2, 1]),
            Err(CycleError::Repeated(1))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 3]),
            Err(CycleError::MissingEdge(1, 3))
        );
        assert_eq!(
            OrientedCycle::new(&g, vec![0, 1, 9]),
            Err(CycleError::OutOfRange(9))
        );
    }
}
