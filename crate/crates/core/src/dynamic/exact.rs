use alloc::vec;
use alloc::vec::Vec;

use super::{greedy_r_dynamic, Coloring};
use crate::graph::{square, Graph};
use crate::ordering::min_backreach_order;

/// Default number of color assignments [`exact_chi_r`] may try.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Limits for [`exact_chi_r`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiOptions {
    /// Largest palette to try; `None` means `Δ² + 1`.
    pub color_cap: Option<usize>,
    /// Maximum number of color assignments over the whole search.
    pub node_budget: u64,
}

impl Default for ChiOptions {
    fn default() -> Self {
        Self {
            color_cap: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Result of an exact `χ_r` computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiOutcome {
    /// `χ_r` is `value`, witnessed by `coloring`.
    Exact {
        /// The r-dynamic chromatic number.
        value: usize,
        /// An r-dynamic coloring with `value` colors.
        coloring: Coloring,
    },
    /// The node budget ran out; `lower <= χ_r <= upper`.
    Unknown {
        /// Every palette below this was refuted.
        lower: usize,
        /// Palette of `witness`.
        upper: usize,
        /// A verified r-dynamic coloring from the greedy algorithm.
        witness: Coloring,
    },
    /// Every palette up to the color cap was refuted.
    LowerBoundOnly {
        /// `cap + 1`.
        lower: usize,
    },
}

impl ChiOutcome {
    /// The exact value, if one was found.
    pub fn value(&self) -> Option<usize> {
        match self {
            ChiOutcome::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// The best known lower bound.
    pub fn lower(&self) -> usize {
        match self {
            ChiOutcome::Exact { value, .. } => *value,
            ChiOutcome::Unknown { lower, .. } | ChiOutcome::LowerBoundOnly { lower } => *lower,
        }
    }
}

enum Search {
    Found,
    Refuted,
    OutOfBudget,
}

struct Solver<'a> {
    graph: &'a Graph,
    palette: usize,
    order: &'a [usize],
    need: Vec<usize>,
    color: Vec<usize>,
    // count[y * (palette + 1) + c]: neighbors of y colored c
    count: Vec<u32>,
    distinct: Vec<usize>,
    uncolored: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Solver<'a> {
    fn new(graph: &'a Graph, order: &'a [usize], r: usize, palette: usize, budget: u64) -> Self {
        let n = graph.vertex_count();
        Self {
            graph,
            palette,
            order,
            need: (0..n).map(|v| r.min(graph.degree(v))).collect(),
            color: vec![0; n],
            count: vec![0; n * (palette + 1)],
            distinct: vec![0; n],
            uncolored: (0..n).map(|v| graph.degree(v)).collect(),
            nodes: 0,
            budget,
        }
    }

    fn slot(&self, y: usize, c: usize) -> usize {
        y * (self.palette + 1) + c
    }

    /// Colors `x` with `c` and reports whether every neighbor can still reach
    /// its demand: colors already seen plus at most one new color per
    /// uncolored neighbor, capped by the colors not yet seen.
    fn assign(&mut self, x: usize, c: usize) -> bool {
        self.color[x] = c;
        let mut feasible = true;
        for &y in self.graph.neighbors(x) {
            let s = self.slot(y, c);
            self.count[s] += 1;
            if self.count[s] == 1 {
                self.distinct[y] += 1;
            }
            self.uncolored[y] -= 1;
        }
        for &y in self.graph.neighbors(x) {
            let reachable = self.distinct[y] + self.uncolored[y].min(self.palette - self.distinct[y]);
            if reachable < self.need[y] {
                feasible = false;
                break;
            }
        }
        feasible
    }

    fn unassign(&mut self, x: usize, c: usize) {
        for &y in self.graph.neighbors(x) {
            let s = self.slot(y, c);
            self.count[s] -= 1;
            if self.count[s] == 0 {
                self.distinct[y] -= 1;
            }
            self.uncolored[y] += 1;
        }
        self.color[x] = 0;
    }

    fn search(&mut self, depth: usize, max_used: usize) -> Search {
        let Some(&x) = self.order.get(depth) else {
            return Search::Found;
        };
        // colors above max_used + 1 are interchangeable with max_used + 1
        for c in 1..=self.palette.min(max_used + 1) {
            if self.count[self.slot(x, c)] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Search::OutOfBudget;
            }
            if self.assign(x, c) {
                match self.search(depth + 1, max_used.max(c)) {
                    Search::Refuted => {}
                    other => return other,
                }
            }
            self.unassign(x, c);
        }
        Search::Refuted
    }
}

/// Exact `χ_r(graph)` by iterative deepening over the palette size.
///
/// Each palette `d` is tested by backtracking over vertices in descending
/// degree order (ties by index). A branch is cut as soon as a color repeats
/// on an edge, or some vertex can no longer collect `min(r, deg)` distinct
/// neighbor colors from its colored and uncolored neighbors. A vertex may only
/// open the next unused color, which removes palette permutations.
///
/// Palettes below the trivial bound `max_v min(r, deg v) + 1` (at least 2 when
/// there is an edge) are skipped since no coloring can use fewer colors.
pub fn exact_chi_r(graph: &Graph, r: usize, options: &ChiOptions) -> ChiOutcome {
    let n = graph.vertex_count();
    if n == 0 {
        return ChiOutcome::Exact {
            value: 0,
            coloring: Coloring::from_colors(Vec::new()).expect("empty"),
        };
    }
    let delta = graph.max_degree();
    let cap = options.color_cap.unwrap_or(delta * delta + 1);
    let mut start = (0..n).map(|v| r.min(graph.degree(v)) + 1).max().unwrap_or(1);
    if graph.edge_count() > 0 {
        start = start.max(2);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(graph.degree(v)), v));

    let mut spent = 0u64;
    for palette in start..=cap {
        let mut solver = Solver::new(graph, &order, r, palette, options.node_budget - spent);
        let outcome = solver.search(0, 0);
        spent += solver.nodes.min(options.node_budget - spent);
        match outcome {
            Search::Found => {
                let coloring = Coloring::from_colors(solver.color).expect("search colors every vertex");
                return ChiOutcome::Exact {
                    value: coloring.palette_size(),
                    coloring,
                };
            }
            Search::Refuted => {}
            Search::OutOfBudget => {
                let (witness, _) = greedy_r_dynamic(graph, &min_backreach_order(graph, 2), r);
                return ChiOutcome::Unknown {
                    lower: palette,
                    upper: witness.palette_size(),
                    witness,
                };
            }
        }
    }
    ChiOutcome::LowerBoundOnly { lower: cap.max(start - 1) + 1 }
}

/// The 2-distance chromatic number `χ(G²)`, which equals `χ_r(G)` for every
/// `r >= Δ(G)`.
pub fn chi_two_distance(graph: &Graph, options: &ChiOptions) -> ChiOutcome {
    exact_chi_r(&square(graph), 0, options)
}
