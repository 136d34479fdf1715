//! Exact solvers. They serve two roles: the inner solvers every reduction
//! scheme hands its sub-instances to (guarantee 1), and the ground-truth
//! oracles the verification harness compares approximate output against.
//!
//! Each solver enforces an explicit, configurable size limit and fails hard
//! instead of silently grinding; none of them aims at record exponents.
//! Witnesses are re-validated independently of the search before they are
//! returned, and all tie-breaking is lexicographic by index so outputs are
//! reproducible.

mod bandwidth;
mod coloring;
mod cycle_cover;
mod matching;
mod mis;
mod setcover;
mod tsp;

pub use bandwidth::exact_bandwidth;
pub use coloring::exact_coloring;
pub use cycle_cover::{min_cycle_cover, CycleCover};
pub use matching::{is_matching, max_matching};
pub use mis::{exact_mis, is_independent};
pub use setcover::{exact_setcover_bruteforce, exact_setcover_dc, exact_setcover_ie};
pub use tsp::held_karp;

/// Hard instance-size limits for the exact solvers.
#[derive(Debug, Clone)]
pub struct Limits {
    pub bandwidth_n: usize,
    pub setcover_bruteforce_m: usize,
    pub setcover_ie_n: usize,
    pub setcover_dc_n: usize,
    pub mis_n: usize,
    pub coloring_n: usize,
    pub tsp_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bandwidth_n: 14,
            setcover_bruteforce_m: 22,
            setcover_ie_n: 20,
            setcover_dc_n: 12,
            mis_n: 26,
            coloring_n: 16,
            tsp_n: 16,
        }
    }
}

impl Limits {
    /// Scales every `n`-style limit (used by the CLI `--limit-n` override).
    pub fn with_n(mut self, n: usize) -> Self {
        self.bandwidth_n = n;
        self.setcover_ie_n = n;
        self.setcover_dc_n = n;
        self.mis_n = n;
        self.coloring_n = n;
        self.tsp_n = n;
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.setcover_bruteforce_m = m;
        self
    }
}

/// An optimum together with its witness and a node counter for diagnostics.
#[derive(Debug, Clone)]
pub struct ExactResult<V, W> {
    pub value: V,
    pub witness: W,
    pub nodes_explored: u64,
}
