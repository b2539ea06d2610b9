//! Witness orders built from known structure, plus a greedy fallback.

use alloc::vec;
use alloc::vec::Vec;

use super::{backreach, LinearOrder, OrderError, Reacher};
use crate::graph::{Graph, KTree, LayeredProduct, Origin, SubdividedGraph};

/// The construction order of a k-tree (base clique first).
///
/// Every vertex's earlier neighbors form a clique of size at most `k`, and any
/// vertex reachable through later vertices is already an earlier neighbor,
/// so the width is at most `k + 1` for every radius.
pub fn reverse_peo_order(kt: &KTree) -> Result<LinearOrder, OrderError> {
    kt.validate()?;
    LinearOrder::from_sequence(kt.construction_order.clone())
}

/// Orders a layered product block by block: all copies of the first base
/// vertex under `base_order`, then all copies of the second, and so on.
/// Within a block copies go by ascending layer.
///
/// With `base_order` a reverse perfect elimination ordering of a k-tree, the
/// t-reach width is at most `(2t + 1)(k + 1)`.
pub fn product_order(lp: &LayeredProduct, base_order: &LinearOrder) -> Result<LinearOrder, OrderError> {
    base_order.check_size(lp.base.graph.vertex_count())?;
    let mut sequence: Vec<usize> = (0..lp.graph.vertex_count()).collect();
    sequence.sort_by_key(|&v| (base_order.rank(lp.projection[v]), lp.layer[v], v));
    LinearOrder::from_sequence(sequence)
}

/// Original vertices first, then subdivision vertices, each by index.
///
/// When every edge carries at least two subdivision vertices this order has
/// 2-reach width at most 3.
pub fn subdivision_order(sg: &SubdividedGraph) -> LinearOrder {
    let (mut originals, subdivisions): (Vec<usize>, Vec<usize>) =
        (0..sg.origins.len()).partition(|&v| sg.origins[v] == Origin::Original);
    originals.extend(subdivisions);
    LinearOrder::from_sequence(originals).expect("partition of 0..n")
}

/// Builds an order from the back: repeatedly places, in front of the
/// vertices already placed, the vertex whose reach set would be smallest,
/// breaking ties by the smallest index.
pub fn min_backreach_order(graph: &Graph, t: usize) -> LinearOrder {
    let n = graph.vertex_count();
    let mut reacher = Reacher::new(n);
    let mut placed = vec![false; n];
    let mut reversed = Vec::with_capacity(n);
    for _ in 0..n {
        let mut choice = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            let size = backreach(&mut reacher, graph, &placed, v, t);
            if choice.is_none_or(|(best, _)| size < best) {
                choice = Some((size, v));
            }
        }
        let (_, v) = choice.expect("an unplaced vertex remains");
        placed[v] = true;
        reversed.push(v);
    }
    reversed.reverse();
    LinearOrder::from_sequence(reversed).expect("every vertex placed once")
}
