//! Linear orders, t-reach sets and strong t-coloring numbers.
//!
//! For an order `π` and radius `t`, a vertex `u` is t-reachable from `v`
//! when `u` is not after `v` and some `u`–`v` path of length at most `t` has
//! all its inner vertices strictly after `v`. The width of `π` is the largest
//! reach set; the strong t-coloring number `col_t` is the minimum width over
//! all orders.

mod exact;
mod order;
mod reach;
mod structural;

use crate::graph::GraphError;

pub use exact::{
    exact_col_t, exact_col_t_bruteforce, ColMethod, ColNumberResult, DEFAULT_BRUTEFORCE_CAP,
    DEFAULT_DP_CAP, MAX_DP_CAP,
};
pub use order::LinearOrder;
pub use reach::{order_width, reach_set, ReachSet};
pub use structural::{min_backreach_order, product_order, reverse_peo_order, subdivision_order};

pub(crate) use reach::{backreach, Reacher};

/// Errors raised by order construction and the coloring number solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    /// The sequence is not a permutation of `0..n`.
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    /// The order and the graph disagree on the vertex count.
    #[error("order covers {order} vertices but the graph has {graph}")]
    SizeMismatch {
        /// Vertices in the order.
        order: usize,
        /// Vertices in the graph.
        graph: usize,
    },
    /// An exact solver was asked to run on a graph above its size cap.
    #[error("graph has {n} vertices, above the exact solver cap of {cap}")]
    CapExceeded {
        /// Vertex count.
        n: usize,
        /// Cap in force.
        cap: usize,
    },
    /// A structured input failed validation.
    #[error(transparent)]
    Structure(#[from] GraphError),
}
