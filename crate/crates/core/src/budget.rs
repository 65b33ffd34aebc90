//! Work budgets for the exact-arithmetic engines.
//!
//! Budgets exist so that an over-ambitious input fails loudly instead of
//! hanging: exceeding one is a distinct outcome, never silently truncated
//! output.  The degree and pair-count caps are deterministic; the wall-clock
//! cap is opt-in so that default runs stay byte-reproducible.

use std::time::{Duration, Instant};
use thiserror::Error;

/// Hard cap on vertex count for any [`crate::graph::Graph`].
pub const MAX_VERTICES: usize = 16;

/// Hard cap on the number of columns (= ring variables) the toric engine
/// accepts.
pub const MAX_COLUMNS: usize = 64;

/// Caps applied to a single Groebner-basis computation.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Abort if any S-polynomial remainder exceeds this total degree.
    pub max_degree: u32,
    /// Abort after this many critical pairs have been processed in one
    /// Buchberger run.
    pub max_pairs: u64,
    /// Optional wall-clock cap per computation.  `None` (the default) keeps
    /// runs deterministic.
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_degree: 6,
            max_pairs: 1_000_000,
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn with_max_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_max_pairs(mut self, p: u64) -> Self {
        self.max_pairs = p;
        self
    }

    pub fn with_time_limit(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }

    pub(crate) fn start(&self) -> Meter {
        Meter {
            budget: self.clone(),
            started: Instant::now(),
            pairs: 0,
        }
    }
}

/// Running tally checked inside the hot loops.
pub(crate) struct Meter {
    budget: Budget,
    started: Instant,
    pairs: u64,
}

impl Meter {
    /// Record one processed pair; error once a cap is hit.
    pub(crate) fn tick_pair(&mut self, basis_size: usize) -> Result<(), BudgetError> {
        self.pairs += 1;
        if self.pairs > self.budget.max_pairs {
            return Err(BudgetError::PairsExceeded {
                max_pairs: self.budget.max_pairs,
                basis_size,
            });
        }
        // Only poll the clock occasionally; it is not free.
        if self.pairs % 256 == 0 {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    return Err(BudgetError::TimeExceeded {
                        limit,
                        pairs_done: self.pairs,
                        basis_size,
                    });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_degree(&self, deg: u32, basis_size: usize) -> Result<(), BudgetError> {
        if deg > self.budget.max_degree {
            Err(BudgetError::DegreeExceeded {
                max_degree: self.budget.max_degree,
                seen: deg,
                pairs_done: self.pairs,
                basis_size,
            })
        } else {
            Ok(())
        }
    }
}

/// A budget violation.  Carries enough partial state to report where the
/// computation stood, clearly distinct from a successful result.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BudgetError {
    #[error("degree budget exceeded: remainder of degree {seen} > cap {max_degree} (after {pairs_done} pairs, basis size {basis_size})")]
    DegreeExceeded {
        max_degree: u32,
        seen: u32,
        pairs_done: u64,
        basis_size: usize,
    },
    #[error("pair budget exceeded: more than {max_pairs} critical pairs (basis size {basis_size})")]
    PairsExceeded { max_pairs: u64, basis_size: usize },
    #[error("time budget exceeded: over {limit:?} (after {pairs_done} pairs, basis size {basis_size})")]
    TimeExceeded {
        limit: Duration,
        pairs_done: u64,
        basis_size: usize,
    },
    #[error("input too large: {what} = {got} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        got: usize,
        cap: usize,
    },
}
