//! Held-Karp style subset dynamic program, used as an independent
//! cross-check of the backtracking search.

use crate::graph::Graph;
use crate::limits::{self, ResourceLimit};

/// Memory-bound cap for the subset table (2^(n-1) words).
pub const DP_MAX_N: usize = 20;

/// Hamiltonicity by dynamic programming over subsets of `1..n`.
///
/// `reach[mask]` holds the set of vertices `v` such that some path starts at
/// vertex 0, visits exactly `mask` among `1..n`, and ends at `v`.
pub fn hamiltonian_dp(g: &Graph) -> Result<bool, ResourceLimit> {
    let n = g.n();
    limits::check("subset dynamic program", n, DP_MAX_N)?;
    if n < 3 {
        return Ok(false);
    }
    let m = n - 1;
    // Bit i of a mask stands for vertex i + 1.
    let adj: Vec<u32> = (1..n)
        .map(|v| (g.neighbors(v).bits() >> 1) as u32)
        .collect();
    let from_zero = (g.neighbors(0).bits() >> 1) as u32;
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut reach = vec![0u32; 1usize << m];
    for i in 0..m {
        if from_zero >> i & 1 == 1 {
            reach[1 << i] |= 1 << i;
        }
    }
    for mask in 1..=full {
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = adj[e] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(reach[full as usize] & from_zero != 0)
}
