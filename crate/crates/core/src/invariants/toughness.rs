//! Exact toughness by enumerating every vertex subset.

use crate::graph::{Graph, VertexSet};
use crate::limits::{self, ResourceLimit};
use crate::rational::Rational;

/// A cut set `S` with `omega(G - S) = components >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToughnessWitness {
    pub cut: VertexSet,
    pub components: usize,
}

impl ToughnessWitness {
    pub fn ratio(&self) -> Rational {
        Rational::new(self.cut.len() as i64, self.components as i64)
    }
}

/// `min |S| / omega(G - S)` over all cut sets, together with the first
/// minimizing set in increasing bitmask order. `+inf` and no witness when
/// the graph has no cut set.
pub fn toughness_with_witness(
    g: &Graph,
) -> Result<(Rational, Option<ToughnessWitness>), ResourceLimit> {
    limits::check("toughness", g.n(), limits::limits().toughness_max_n)?;
    let n = g.n();
    let mut best: Option<ToughnessWitness> = None;
    let full = VertexSet::full(n).bits();
    for bits in 0..=full {
        let cut = VertexSet::from_bits(bits);
        // Need at least two vertices left to have two components.
        if cut.len() + 2 > n {
            continue;
        }
        if let Some(b) = best {
            // |S| / w with w <= n - |S|; skip sets that cannot beat the incumbent.
            let max_w = n - cut.len();
            if cut.len() * b.components >= b.cut.len() * max_w {
                continue;
            }
        }
        let w = g.component_count(cut);
        if w < 2 {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => cut.len() * b.components < b.cut.len() * w,
        };
        if better {
            best = Some(ToughnessWitness { cut, components: w });
        }
    }
    Ok(match best {
        Some(w) => (w.ratio(), Some(w)),
        None => (Rational::Infinity, None),
    })
}

pub fn toughness(g: &Graph) -> Result<Rational, ResourceLimit> {
    toughness_with_witness(g).map(|(t, _)| t)
}

/// `toughness(g) >= t`, compared exactly.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<bool, ResourceLimit> {
    Ok(toughness(g)? >= t)
}
