//! Exact r-dynamic chromatic numbers.
//!
//! Two independent routes compute `χ_r`: [`brute_force_chi_r`] enumerates every
//! assignment and serves as the test oracle, while [`exact_chi_r`] is a
//! branch-and-bound decision procedure scanned upward from the
//! `min(r, Δ) + 1` lower bound and capped by a greedy witness.

mod brute;
mod exact;
mod greedy;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use brute::brute_force_chi_r;
pub use exact::exact_chi_r;
pub use greedy::greedy_upper_bound;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default wall-clock budget for one exact solve.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);
/// Largest order the brute-force oracle accepts by default.
pub const DEFAULT_BRUTE_CAP: usize = 12;
/// Largest order [`chi_r_profile`] accepts by default.
pub const DEFAULT_PROFILE_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// `None` disables the time limit.
    pub budget: Option<Duration>,
    /// Prune on "colored distinct + still-uncolored neighbors" falling short of
    /// the quota, not only once a neighborhood is fully colored.
    pub forecast: bool,
    pub brute_cap: usize,
    pub profile_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            budget: Some(DEFAULT_BUDGET),
            forecast: true,
            brute_cap: DEFAULT_BRUTE_CAP,
            profile_cap: DEFAULT_PROFILE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub chi_r: usize,
    pub witness: Coloring,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Why an exact solve produced no value.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("budget of {budget:?} exhausted after {nodes_explored} nodes; chi_r in [{lower}, {upper}]")]
    Timeout {
        budget: Duration,
        nodes_explored: u64,
        lower: usize,
        upper: usize,
    },
    #[error(transparent)]
    Invalid(#[from] InvalidInput),
}

/// Input rejected before any search.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvalidInput {
    #[error("r must be at least 1, got {0}")]
    R(usize),
    #[error("graph order {order} exceeds the cap of {cap}")]
    Cap { order: usize, cap: usize },
}

impl From<InvalidInput> for Error {
    fn from(e: InvalidInput) -> Self {
        match e {
            InvalidInput::R(r) => Error::InvalidR(r),
            InvalidInput::Cap { order, cap } => Error::CapExceeded { order, cap },
        }
    }
}

pub(crate) fn check_r(r: usize) -> Result<(), InvalidInput> {
    if r < 1 {
        Err(InvalidInput::R(r))
    } else {
        Ok(())
    }
}

/// `min(r, Δ(G)) + 1`, a lower bound on `χ_r(G)`.
pub fn lemma1_lower_bound(g: &Graph, r: usize) -> usize {
    r.min(g.max_degree()) + 1
}

/// `(r, χ_r)` for `r = 1..=Δ(G)`; empty for an edgeless graph.
pub fn chi_r_profile(g: &Graph, config: &SolverConfig) -> Result<Vec<(usize, usize)>, SolveError> {
    if g.order() > config.profile_cap {
        return Err(InvalidInput::Cap {
            order: g.order(),
            cap: config.profile_cap,
        }
        .into());
    }
    (1..=g.max_degree())
        .map(|r| exact_chi_r(g, r, config).map(|res| (r, res.chi_r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use crate::product::lex_product;

    #[test]
    fn lower_bound_values() {
        assert_eq!(lemma1_lower_bound(&cycle(5).unwrap(), 2), 3);
        assert_eq!(lemma1_lower_bound(&complete(4).unwrap(), 1), 2);
        let g = lex_product(&path(2).unwrap(), &star(3).unwrap());
        assert_eq!(lemma1_lower_bound(&g, 9), 6);
        assert_eq!(lemma1_lower_bound(&complete(1).unwrap(), 3), 1);
    }

    #[test]
    fn profiles() {
        let cfg = SolverConfig::default();
        assert_eq!(chi_r_profile(&cycle(5).unwrap(), &cfg).unwrap(), vec![(1, 3), (2, 5)]);
        assert_eq!(chi_r_profile(&complete(3).unwrap(), &cfg).unwrap(), vec![(1, 3), (2, 3)]);
        assert_eq!(chi_r_profile(&path(4).unwrap(), &cfg).unwrap(), vec![(1, 2), (2, 3)]);
        assert!(chi_r_profile(&complete(1).unwrap(), &cfg).unwrap().is_empty());
        let small = SolverConfig {
            profile_cap: 4,
            ..SolverConfig::default()
        };
        assert!(matches!(
            chi_r_profile(&cycle(5).unwrap(), &small),
            Err(SolveError::Invalid(InvalidInput::Cap { order: 5, cap: 4 }))
        ));
    }
}
