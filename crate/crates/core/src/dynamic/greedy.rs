use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::Coloring;
use crate::graph::Graph;
use crate::ordering::{LinearOrder, Reacher};

/// Forbidden colors and the choice made for one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    /// The vertex colored at this step.
    pub vertex: usize,
    /// Colors on `Reach_2(vertex) - {vertex}`, ascending.
    pub forbidden_strongly_proper: Vec<usize>,
    /// Colors already seen by an earlier neighbor that still shows fewer than
    /// `r` colors, ascending.
    pub forbidden_neighbors: Vec<usize>,
    /// Smallest color outside both sets.
    pub chosen: usize,
}

/// Per-vertex record of a [`greedy_r_dynamic`] run, in processing order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyTrace {
    /// One entry per vertex.
    pub steps: Vec<GreedyStep>,
}

/// Colors the vertices along `order`, giving each the smallest color that
/// keeps the partial coloring strongly proper and weakly r-dynamic.
///
/// When vertex `v` is colored, two kinds of colors are excluded:
///
/// - every color on `Reach_2(v) - {v}` (all of these vertices are earlier),
///   so no two vertices in a common 2-reach set share a color;
/// - for each earlier neighbor `u` whose colored neighbors show at most
///   `r - 1` colors, all of those colors, so `v` adds a new color at `u`.
///
/// Nothing is needed for `v`'s own neighborhood: two earlier neighbors
/// `a < b` of `v` are joined by `a - v - b` with `v` after `b`, so `a` lies in
/// `Reach_2(b)` and already has a different color. Writing `w` for the 2-reach
/// width of `order`, at most `w - 1` colors are excluded by the first rule and
/// `(w - 1)(r - 1)` by the second, so the palette never exceeds
/// `(w - 1)·r + 1` (or `w` when `r = 0`).
///
/// # Panics
///
/// If `order` does not cover exactly the vertices of `graph`.
pub fn greedy_r_dynamic(graph: &Graph, order: &LinearOrder, r: usize) -> (Coloring, GreedyTrace) {
    let n = graph.vertex_count();
    assert_eq!(order.len(), n, "order and graph sizes differ");
    let rank = order.positions();
    let mut reacher = Reacher::new(n);
    let mut color = vec![0usize; n];
    // colors present on the already colored neighbors of each vertex
    let mut seen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut steps = Vec::with_capacity(n);

    for &v in order.sequence() {
        let here = rank[v];
        let mut strongly_proper = BTreeSet::new();
        reacher.visit(graph, v, 2, |y| rank[y] > here, |u| {
            strongly_proper.insert(color[u]);
        });
        let mut neighbors = BTreeSet::new();
        for &u in graph.neighbors(v) {
            if rank[u] < here && seen[u].len() < r {
                neighbors.extend(seen[u].iter().copied());
            }
        }
        let chosen = (1..)
            .find(|c| !strongly_proper.contains(c) && !neighbors.contains(c))
            .expect("finitely many colors are forbidden");
        color[v] = chosen;
        for &u in graph.neighbors(v) {
            seen[u].insert(chosen);
        }
        steps.push(GreedyStep {
            vertex: v,
            forbidden_strongly_proper: strongly_proper.into_iter().collect(),
            forbidden_neighbors: neighbors.into_iter().collect(),
            chosen,
        });
    }
    let coloring = Coloring::from_colors(color).expect("greedy colors are positive");
    (coloring, GreedyTrace { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamic::verify_r_dynamic;
    use crate::graph::{complete_graph, path_graph, random_k_tree};
    use crate::ordering::reverse_peo_order;

    #[test]
    fn path_with_natural_order() {
        let g = path_graph(6);
        let (coloring, trace) = greedy_r_dynamic(&g, &LinearOrder::identity(6), 2);
        assert!(coloring.palette_size() <= 3);
        assert!(verify_r_dynamic(&g, &coloring, 2).unwrap().ok);
        assert_eq!(trace.steps.len(), 6);
    }

    #[test]
    fn single_vertex() {
        let g = complete_graph(1);
        for r in 0..5 {
            let (coloring, _) = greedy_r_dynamic(&g, &LinearOrder::identity(1), r);
            assert_eq!(coloring.colors(), &[1]);
        }
    }

    #[test]
    fn two_tree_with_peo() {
        for seed in 0..10 {
            let kt = random_k_tree(2, 12, seed).unwrap();
            let order = reverse_peo_order(&kt).unwrap();
            let (coloring, _) = greedy_r_dynamic(&kt.graph, &order, 3);
            assert!(coloring.palette_size() <= 7);
            assert!(verify_r_dynamic(&kt.graph, &coloring, 3).unwrap().ok);
        }
    }

    #[test]
    fn trace_records_forbidden_sets() {
        // star, center last
        let g = crate::graph::star_graph(3);
        let order = LinearOrder::from_sequence(vec![1, 2, 3, 0]).unwrap();
        let (coloring, trace) = greedy_r_dynamic(&g, &order, 2);
        // leaves 2-reach each other only through the later center
        assert_eq!(trace.steps[1].forbidden_strongly_proper, [1]);
        assert_eq!(coloring.colors(), &[4, 1, 2, 3]);
    }
}
