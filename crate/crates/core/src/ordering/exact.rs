use alloc::vec;
use alloc::vec::Vec;

use super::{order_width, LinearOrder, OrderError, Reacher};
use crate::graph::Graph;

/// Default vertex cap for [`exact_col_t`].
pub const DEFAULT_DP_CAP: usize = 20;
/// Largest cap [`exact_col_t`] accepts; the table holds `2^n` bytes.
pub const MAX_DP_CAP: usize = 28;
/// Default vertex cap for [`exact_col_t_bruteforce`].
pub const DEFAULT_BRUTEFORCE_CAP: usize = 9;

/// How a [`ColNumberResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColMethod {
    /// Subset dynamic program, exact.
    ExactDp,
    /// Enumeration of all orders, exact.
    ExactBruteforce,
    /// Width of a supplied order; only an upper bound on `col_t`.
    UpperBoundOnly,
}

impl ColMethod {
    /// Stable lowercase name used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            ColMethod::ExactDp => "exact-dp",
            ColMethod::ExactBruteforce => "exact-bruteforce",
            ColMethod::UpperBoundOnly => "upper-bound-only",
        }
    }
}

/// A strong t-coloring number (or upper bound) with a witness order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColNumberResult {
    /// Radius.
    pub t: usize,
    /// `col_t` when exact, otherwise the witness width.
    pub value: usize,
    /// An order of width `value`.
    pub witness: LinearOrder,
    /// Provenance of `value`.
    pub method: ColMethod,
}

impl ColNumberResult {
    /// Wraps the width of an arbitrary order as an upper bound.
    pub fn upper_bound(graph: &Graph, witness: LinearOrder, t: usize) -> Result<Self, OrderError> {
        witness.check_size(graph.vertex_count())?;
        Ok(Self {
            t,
            value: order_width(graph, &witness, t),
            witness,
            method: ColMethod::UpperBoundOnly,
        })
    }

    /// Whether `value` is the exact strong t-coloring number.
    pub fn is_exact(&self) -> bool {
        self.method != ColMethod::UpperBoundOnly
    }
}

fn bit_adjacency(graph: &Graph) -> Vec<u32> {
    (0..graph.vertex_count())
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Reach size of `v` when the vertices in `after` are ranked after `v` and all
/// other vertices before it.
fn backreach_bits(adj: &[u32], v: usize, after: u32, t: usize) -> u8 {
    let mut frontier = 1u32 << v;
    let mut visited = frontier;
    let mut reached = 0u32;
    for _ in 0..t {
        let mut next = 0u32;
        let mut rest = frontier;
        while rest != 0 {
            next |= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        next &= !visited;
        visited |= next;
        reached |= next & !after;
        frontier = next & after;
        if frontier == 0 {
            break;
        }
    }
    reached.count_ones() as u8 + 1
}

/// Exact `col_t(graph)` by dynamic programming over suffix sets.
///
/// `Reach_t(v)` only depends on `v` and on the set `S` of vertices ranked after
/// `v`: inner vertices must lie in `S` and endpoints outside `S ∪ {v}`. So with
/// `f(V) = 0` and
///
/// `f(S) = min_{v ∉ S} max(backreach(v, S), f(S ∪ {v}))`
///
/// the answer is `f(∅)`. The witness is rebuilt from the back by repeatedly
/// taking the smallest vertex that attains `f(S)`.
pub fn exact_col_t(graph: &Graph, t: usize, cap: usize) -> Result<ColNumberResult, OrderError> {
    let n = graph.vertex_count();
    let cap = cap.min(MAX_DP_CAP);
    if n > cap {
        return Err(OrderError::CapExceeded { n, cap });
    }
    let adj = bit_adjacency(graph);
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut best = vec![0u8; 1usize << n];
    for after in (0..full).rev() {
        let mut value = u8::MAX;
        let mut free = !after & full;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let tail = best[(after | 1 << v) as usize];
            if tail >= value {
                continue;
            }
            value = value.min(tail.max(backreach_bits(&adj, v, after, t)));
        }
        best[after as usize] = value;
    }

    let mut sequence = Vec::with_capacity(n);
    let mut after = 0u32;
    while after != full {
        let target = best[after as usize];
        let v = (0..n)
            .find(|&v| {
                after & 1 << v == 0
                    && best[(after | 1 << v) as usize].max(backreach_bits(&adj, v, after, t)) == target
            })
            .expect("an optimal transition exists");
        sequence.push(v);
        after |= 1 << v;
    }
    sequence.reverse();
    Ok(ColNumberResult {
        t,
        value: best[0] as usize,
        witness: LinearOrder::from_sequence(sequence).expect("descent visits every vertex once"),
        method: ColMethod::ExactDp,
    })
}

/// Exact `col_t(graph)` by trying every order. Returns the lexicographically
/// first optimal order.
pub fn exact_col_t_bruteforce(graph: &Graph, t: usize, cap: usize) -> Result<ColNumberResult, OrderError> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(OrderError::CapExceeded { n, cap });
    }
    let mut reacher = Reacher::new(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let order = LinearOrder::from_sequence(perm.clone()).expect("permutation");
        let bound = best.as_ref().map_or(usize::MAX, |(w, _)| *w);
        let mut width = 0;
        for v in 0..n {
            width = width.max(reacher.reach_size(graph, &order, v, t));
            if width >= bound {
                break;
            }
        }
        if width < bound {
            best = Some((width, perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let (value, sequence) = best.expect("at least one order exists");
    Ok(ColNumberResult {
        t,
        value,
        witness: LinearOrder::from_sequence(sequence).expect("permutation"),
        method: ColMethod::ExactBruteforce,
    })
}

fn next_permutation(items: &mut [usize]) -> bool {
    let Some(i) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = items.iter().rposition(|&x| x > items[i]).expect("pivot has a successor");
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}
