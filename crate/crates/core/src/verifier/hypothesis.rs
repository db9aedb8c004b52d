//! Hypothesis filters: the main theorem, its two corollaries, and two
//! earlier sufficient conditions used as cross-checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{alpha_e, connectivity, find_p2kp1, mu, toughness, InvariantError};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisKind {
    /// 1-tough, `k`-connected, `(P2 u kP1)`-free, `mu_{k+1} >= (7k-6)/5`.
    MainTheorem,
    /// `(7k-6)/10`-tough and `(P2 u kP1)`-free, `k >= 3`.
    ToughCorollary,
    /// 1-tough, `k`-connected, `(P2 u kP1)`-free, `alpha_e <= k`.
    EssentialCorollary,
    /// 1-tough, `max{2k-2, 2}`-connected, `(P2 u kP1)`-free.
    ConnectivityCrossCheck,
    /// 1-tough, `k`-connected, `(P2 u kP1)`-free, `delta >= 3(k-1)/2`.
    MinDegreeCrossCheck,
}

impl HypothesisKind {
    pub const ALL: [HypothesisKind; 5] = [
        HypothesisKind::MainTheorem,
        HypothesisKind::ToughCorollary,
        HypothesisKind::EssentialCorollary,
        HypothesisKind::ConnectivityCrossCheck,
        HypothesisKind::MinDegreeCrossCheck,
    ];

    pub fn id(self) -> &'static str {
        match self {
            HypothesisKind::MainTheorem => "thm-main",
            HypothesisKind::ToughCorollary => "cor-tough",
            HypothesisKind::EssentialCorollary => "cor-essential",
            HypothesisKind::ConnectivityCrossCheck => "xcheck-connectivity",
            HypothesisKind::MinDegreeCrossCheck => "xcheck-min-degree",
        }
    }

    fn min_k(self) -> usize {
        match self {
            HypothesisKind::ToughCorollary => 3,
            HypothesisKind::ConnectivityCrossCheck => 1,
            _ => 2,
        }
    }

    /// Whether the conclusion admits the Petersen graph as an exception.
    pub fn allows_petersen(self) -> bool {
        matches!(
            self,
            HypothesisKind::MainTheorem
                | HypothesisKind::ToughCorollary
                | HypothesisKind::MinDegreeCrossCheck
        )
    }
}

impl fmt::Display for HypothesisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisError {
    #[error("unknown hypothesis {0:?} (expected one of thm-main, cor-tough, cor-essential, xcheck-connectivity, xcheck-min-degree)")]
    Unknown(String),
    #[error("{kind} needs k >= {min}, got {k}")]
    KTooSmall {
        kind: HypothesisKind,
        k: usize,
        min: usize,
    },
}

impl FromStr for HypothesisKind {
    type Err = HypothesisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HypothesisKind::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| HypothesisError::Unknown(s.to_string()))
    }
}

/// One filter, as the list of bounds it imposes. Unused bounds are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub kind: HypothesisKind,
    pub k: usize,
    pub toughness_bound: Rational,
    pub connectivity_bound: usize,
    pub freeness_k: usize,
    pub mu_index: Option<usize>,
    pub mu_bound: Option<Rational>,
    pub alpha_e_max: Option<usize>,
    pub min_degree_bound: Option<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Order,
    Toughness,
    Connectivity,
    Freeness,
    Mu,
    AlphaE,
    MinDegree,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Order => "order",
            Condition::Toughness => "toughness",
            Condition::Connectivity => "connectivity",
            Condition::Freeness => "freeness",
            Condition::Mu => "mu",
            Condition::AlphaE => "alpha-e",
            Condition::MinDegree => "min-degree",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub passed: bool,
    pub detail: String,
}

/// Every condition of a hypothesis evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterResult {
    pub passes: bool,
    pub checks: Vec<ConditionCheck>,
}

impl FilterResult {
    pub fn failed(&self) -> impl Iterator<Item = Condition> + '_ {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.condition)
    }

    pub fn check(&self, condition: Condition) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| c.condition == condition)
    }
}

impl Hypothesis {
    pub fn new(kind: HypothesisKind, k: usize) -> Result<Self, HypothesisError> {
        if k < kind.min_k() {
            return Err(HypothesisError::KTooSmall {
                kind,
                k,
                min: kind.min_k(),
            });
        }
        let ki = k as i64;
        let mut h = Hypothesis {
            kind,
            k,
            toughness_bound: Rational::integer(1),
            connectivity_bound: k,
            freeness_k: k,
            mu_index: None,
            mu_bound: None,
            alpha_e_max: None,
            min_degree_bound: None,
        };
        match kind {
            HypothesisKind::MainTheorem => {
                h.mu_index = Some(k + 1);
                h.mu_bound = Some(Rational::new(7 * ki - 6, 5));
            }
            HypothesisKind::ToughCorollary => {
                h.toughness_bound = Rational::new(7 * ki - 6, 10);
                h.connectivity_bound = 0;
            }
            HypothesisKind::EssentialCorollary => h.alpha_e_max = Some(k),
            HypothesisKind::ConnectivityCrossCheck => {
                h.connectivity_bound = (2 * k).saturating_sub(2).max(2)
            }
            HypothesisKind::MinDegreeCrossCheck => {
                h.min_degree_bound = Some(Rational::new(3 * (ki - 1), 2))
            }
        }
        Ok(h)
    }

    pub fn main(k: usize) -> Result<Self, HypothesisError> {
        Hypothesis::new(HypothesisKind::MainTheorem, k)
    }

    pub fn id(&self) -> String {
        format!("{}(k={})", self.kind, self.k)
    }

    /// Evaluates every condition, cheapest first; all are reported even
    /// after one fails.
    pub fn filter(&self, g: &Graph) -> Result<FilterResult, InvariantError> {
        let mut checks = Vec::new();
        let mut push = |condition, passed, detail: String| {
            checks.push(ConditionCheck {
                condition,
                passed,
                detail,
            })
        };

        push(Condition::Order, g.n() >= 3, format!("n = {}", g.n()));
        if self.connectivity_bound > 0 {
            let kappa = connectivity(g);
            push(
                Condition::Connectivity,
                kappa >= self.connectivity_bound,
                format!("kappa = {kappa} vs {}", self.connectivity_bound),
            );
        }
        if let Some(bound) = self.min_degree_bound {
            let delta = g.min_degree();
            push(
                Condition::MinDegree,
                Rational::from(delta) >= bound,
                format!("delta = {delta} vs {bound}"),
            );
        }
        match find_p2kp1(g, self.freeness_k) {
            None => push(
                Condition::Freeness,
                true,
                format!("P2 u {}P1-free", self.freeness_k),
            ),
            Some(w) => push(
                Condition::Freeness,
                false,
                format!(
                    "induced P2 u {}P1: edge {:?}, isolated {:?}",
                    self.freeness_k,
                    w.edge,
                    w.isolated.to_vec()
                ),
            ),
        }
        let t = toughness(g)?;
        push(
            Condition::Toughness,
            t >= self.toughness_bound,
            format!("toughness = {t} vs {}", self.toughness_bound),
        );
        if let (Some(j), Some(bound)) = (self.mu_index, self.mu_bound) {
            let value = mu(g, j)?;
            push(
                Condition::Mu,
                value >= bound,
                format!("mu_{j} = {value} vs {bound}"),
            );
        }
        if let Some(cap) = self.alpha_e_max {
            let a = alpha_e(g)?;
            push(
                Condition::AlphaE,
                a <= cap,
                format!("alpha_e = {a} vs <= {cap}"),
            );
        }
        let passes = checks.iter().all(|c| c.passed);
        Ok(FilterResult { passes, checks })
    }
}
