//! The intervals `C_i = x_i C x_{i+1}` between consecutive hubs.

use serde::Serialize;

use super::{SurgeryContext, SurgeryError};

/// Whether `C_i` has an edge with both ends adjacent to `X^-`.
pub fn bad_interval(ctx: &SurgeryContext, i: usize) -> Result<bool, SurgeryError> {
    let f = ctx.frame();
    let i = f.check_index(i)?;
    let covered = f.covered;
    Ok(f.interval(i)
        .windows(2)
        .any(|e| covered.contains(e[0]) && covered.contains(e[1])))
}

/// The four properties of `C_i` that coincide in the extremal structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalEquivalence {
    pub bad: bool,
    /// `x_i^+ in N(X^-)`
    pub successor_covered: bool,
    /// `x_{i+1}^- in N(X^+)`
    pub predecessor_covered: bool,
    /// `|V(C_i)|` is even
    pub even: bool,
}

impl IntervalEquivalence {
    pub fn agree(&self) -> bool {
        self.bad == self.successor_covered
            && self.bad == self.predecessor_covered
            && self.bad == self.even
    }
}

pub fn interval_equivalence(
    ctx: &SurgeryContext,
    i: usize,
) -> Result<IntervalEquivalence, SurgeryError> {
    let bad = bad_interval(ctx, i)?;
    let f = ctx.frame();
    let i = i as isize;
    let order = f.interval(i).len().min(f.cycle.len());
    Ok(IntervalEquivalence {
        bad,
        successor_covered: f.covered.contains(f.xp(i)),
        predecessor_covered: f.covered_plus.contains(f.xm(i + 1)),
        even: order % 2 == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::super::context::tests::c5_plus_hub;
    use super::*;
    use crate::graph::Graph;
    use crate::hamiltonicity::{longest_cycle, OrientedCycle};

    #[test]
    fn c5_intervals() {
        let (g, c) = c5_plus_hub();
        let ctx = SurgeryContext::new(&g, 2, &c, 5).unwrap();
        // C_2 = 2 3 4 0 holds the edge 2-3 with both ends in N(X^-) = {0, 2, 3}.
        assert!(bad_interval(&ctx, 2).unwrap());
        // C_1 = 0 1 2: 1 is not covered.
        assert!(!bad_interval(&ctx, 1).unwrap());
        assert!(bad_interval(&ctx, 0).is_err());
    }

    #[test]
    fn alternating_interval_is_not_bad() {
        // C8 with hubs 0 and 4: X^- = {7, 3}, N(X^-) = {0, 2, 4, 6}; C_1 = 0 1 2 3 4 alternates.
        let g =
            Graph::from_edges(9, (0..8).map(|i| (i, (i + 1) % 8)).chain([(8, 0), (8, 4)])).unwrap();
        let c = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        let f = super::super::context::Frame::new(&g, 2, &c, 8).unwrap();
        let covered = f.covered;
        assert_eq!(covered.to_vec(), vec![0, 2, 4, 6]);
        assert!(!f
            .interval(1)
            .windows(2)
            .any(|e| covered.contains(e[0]) && covered.contains(e[1])));
    }

    #[test]
    fn petersen_intervals_all_bad_and_even() {
        let g = Graph::petersen();
        let c = longest_cycle(&g).unwrap().unwrap();
        let u0 = (g.vertices() - c.vertex_set()).first().unwrap();
        let ctx = SurgeryContext::new(&g, 3, &c, u0).unwrap();
        for i in 1..=3 {
            let eq = interval_equivalence(&ctx, i).unwrap();
            assert!(eq.bad && eq.even && eq.agree(), "{eq:?}");
        }
    }
}
