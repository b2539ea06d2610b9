//! Core algorithms for r-dynamic graph coloring driven by strong coloring
//! number orders.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`graph`]: an immutable simple graph plus generators for the families
//!   used as test vehicles (complete subdivisions, k-trees, layered strong
//!   products with a path, squares, universal-vertex extensions).
//! - [`ordering`]: linear orders, t-reach sets, order widths, exact strong
//!   t-coloring numbers on small graphs and structural witness orders.
//! - [`dynamic`]: the greedy order-driven r-dynamic coloring, a verifier and
//!   an exact branch-and-bound solver for the r-dynamic chromatic number.
//!
//! File formats and the command-line front end live in the `dynchroma`
//! crate.
#![cfg_attr(not(test), no_std)]
#![deny(missing_docs)]

extern crate alloc;

pub mod dynamic;
pub mod graph;
pub mod ordering;

pub use dynamic::{
    chi_two_distance, exact_chi_r, greedy_r_dynamic, theorem_bound, verify_r_dynamic, ChiOptions,
    DynamicViolation, DEFAULT_NODE_BUDGET,
    ChiOutcome, Coloring, ColoringError, GreedyStep, GreedyTrace, VerificationReport,
};
pub use graph::{
    add_universal, complete_graph, cycle_graph, edgeless_graph, path_graph, random_graph,
    random_k_tree, square, star_graph, strong_product_with_path, subdivide, Graph, GraphError,
    KTree, Keep, LayeredProduct, Origin, SubdividedGraph,
};
pub use ordering::{
    exact_col_t, exact_col_t_bruteforce, min_backreach_order, order_width, product_order,
    DEFAULT_BRUTEFORCE_CAP, DEFAULT_DP_CAP,
    reach_set, reverse_peo_order, subdivision_order, ColMethod, ColNumberResult, LinearOrder,
    OrderError, ReachSet,
};
