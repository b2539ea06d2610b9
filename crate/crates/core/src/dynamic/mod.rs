//! r-dynamic colorings: verification, the order-driven greedy algorithm and
//! an exact solver for the r-dynamic chromatic number `χ_r`.
//!
//! A proper coloring is r-dynamic when every vertex `v` sees at least
//! `min(r, deg(v))` distinct colors on its neighbors. `r = 0` is plain proper
//! coloring and `r >= Δ` is 2-distance coloring, i.e. proper coloring of the
//! square.

mod coloring;
mod exact;
mod greedy;

pub use coloring::{verify_r_dynamic, Coloring, ColoringError, DynamicViolation, VerificationReport};
pub use exact::{chi_two_distance, exact_chi_r, ChiOptions, ChiOutcome, DEFAULT_NODE_BUDGET};
pub use greedy::{greedy_r_dynamic, GreedyStep, GreedyTrace};

/// `(k - 1)·r + 1`: the palette bound for graphs whose strong 2-coloring
/// number (or the 2-reach width of the order used) is at most `k`.
///
/// Only meaningful for `r >= 1`; with `r = 0` it returns 1, which bounds `χ`
/// only for edgeless graphs.
pub fn theorem_bound(k: usize, r: usize) -> usize {
    k.saturating_sub(1) * r + 1
}
