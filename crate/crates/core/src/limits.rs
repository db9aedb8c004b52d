//! Resource caps for the exponential-time routines.

use std::sync::OnceLock;

use thiserror::Error;

/// Environment variable that, when set to an integer, replaces every cap.
pub const MAX_N_ENV: &str = "HAMFORBID_MAX_N";

/// Largest order for which the exhaustive labeled-graph generator can work at all
/// (edge masks must fit in 64 bits).
pub const EXHAUSTIVE_HARD_MAX: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub toughness_max_n: usize,
    pub essential_max_n: usize,
    pub hamiltonian_max_n: usize,
    pub exhaustive_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            toughness_max_n: 16,
            essential_max_n: 20,
            hamiltonian_max_n: 24,
            exhaustive_max_n: 7,
        }
    }
}

impl Limits {
    pub fn uniform(n: usize) -> Self {
        Limits {
            toughness_max_n: n,
            essential_max_n: n,
            hamiltonian_max_n: n,
            exhaustive_max_n: n.min(EXHAUSTIVE_HARD_MAX),
        }
    }

    fn from_env() -> Self {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }
}

/// Process-wide caps: the defaults, or [`MAX_N_ENV`] if it was set when first read.
pub fn limits() -> &'static Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    LIMITS.get_or_init(Limits::from_env)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} is limited to n <= {cap}, got n = {n} (set {MAX_N_ENV} to override)")]
pub struct ResourceLimit {
    pub what: &'static str,
    pub n: usize,
    pub cap: usize,
}

pub(crate) fn check(what: &'static str, n: usize, cap: usize) -> Result<(), ResourceLimit> {
    if n > cap {
        Err(ResourceLimit { what, n, cap })
    } else {
        Ok(())
    }
}
