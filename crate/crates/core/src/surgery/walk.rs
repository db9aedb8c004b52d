//! Assembles vertex sequences from pieces of an oriented cycle.

use super::{Recipe, SurgeryError};
use crate::graph::Graph;
use crate::hamiltonicity::OrientedCycle;

pub(crate) struct Walk<'c> {
    cycle: &'c OrientedCycle,
    seq: Vec<usize>,
}

impl<'c> Walk<'c> {
    pub(crate) fn on(cycle: &'c OrientedCycle) -> Self {
        Walk {
            cycle,
            seq: Vec::with_capacity(cycle.len() + 2),
        }
    }

    /// Appends `z ->C w`.
    pub(crate) fn fwd(mut self, z: usize, w: usize) -> Self {
        self.seq.extend(self.cycle.segment(z, w));
        self
    }

    /// Appends `z <-C w` (from `z` against the orientation down to `w`).
    pub(crate) fn bwd(mut self, z: usize, w: usize) -> Self {
        self.seq.extend(self.cycle.segment_rev(z, w));
        self
    }

    pub(crate) fn then(mut self, v: usize) -> Self {
        self.seq.push(v);
        self
    }

    pub(crate) fn into_vec(self) -> Vec<usize> {
        self.seq
    }

    /// Closes the walk into a cycle of `g`, validating every invariant.
    pub(crate) fn close(self, g: &Graph, recipe: Recipe) -> Result<OrientedCycle, SurgeryError> {
        close_sequence(g, self.seq, recipe)
    }
}

pub(crate) fn close_sequence(
    g: &Graph,
    seq: Vec<usize>,
    recipe: Recipe,
) -> Result<OrientedCycle, SurgeryError> {
    OrientedCycle::new(g, seq.clone()).map_err(|e| SurgeryError::InvalidSplice {
        recipe,
        detail: format!("{e} in {seq:?}"),
    })
}
