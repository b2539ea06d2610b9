use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::LinearOrder;
use crate::graph::Graph;

/// The vertices t-reachable from `center` under some order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachSet {
    /// The vertex the set is taken from.
    pub center: usize,
    /// Path length bound `t`.
    pub radius: usize,
    /// Members in ascending vertex index, `center` included.
    pub members: Vec<usize>,
}

/// Reusable BFS scratch space for bounded reach queries.
///
/// A query starts at `center` and walks at most `radius` edges. Vertices for
/// which `inner` holds are passed through; any other vertex (except the
/// center) reached this way is collected as an endpoint and not expanded.
/// Breadth-first search reaches each endpoint along a shortest admissible
/// route, which is a simple path, so walks and paths give the same sets.
pub(crate) struct Reacher {
    stamp: Vec<u32>,
    current: u32,
    queue: VecDeque<(usize, usize)>,
}

impl Reacher {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            current: 0,
            queue: VecDeque::new(),
        }
    }

    pub(crate) fn visit(
        &mut self,
        graph: &Graph,
        center: usize,
        radius: usize,
        inner: impl Fn(usize) -> bool,
        mut endpoint: impl FnMut(usize),
    ) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.current = 1;
        }
        let mark = self.current;
        self.stamp[center] = mark;
        self.queue.clear();
        self.queue.push_back((center, 0));
        while let Some((x, depth)) = self.queue.pop_front() {
            if depth == radius {
                continue;
            }
            for &y in graph.neighbors(x) {
                if self.stamp[y] == mark {
                    continue;
                }
                self.stamp[y] = mark;
                if inner(y) {
                    self.queue.push_back((y, depth + 1));
                } else {
                    endpoint(y);
                }
            }
        }
    }

    /// `|Reach_t(v)|` under `order`.
    pub(crate) fn reach_size(&mut self, graph: &Graph, order: &LinearOrder, v: usize, t: usize) -> usize {
        let rank = order.positions();
        let here = rank[v];
        let mut count = 1;
        self.visit(graph, v, t, |y| rank[y] > here, |_| count += 1);
        count
    }
}

/// `Reach_t(v)`: the vertices `u` ranked at most `v` that are joined to `v`
/// by a path of length at most `t` whose inner vertices all come after `v`.
///
/// # Panics
///
/// If `order` does not cover exactly the vertices of `graph`.
pub fn reach_set(graph: &Graph, order: &LinearOrder, v: usize, t: usize) -> ReachSet {
    assert_eq!(order.len(), graph.vertex_count(), "order and graph sizes differ");
    let rank = order.positions();
    let here = rank[v];
    let mut members = vec![v];
    Reacher::new(graph.vertex_count()).visit(graph, v, t, |y| rank[y] > here, |u| members.push(u));
    members.sort_unstable();
    ReachSet {
        center: v,
        radius: t,
        members,
    }
}

/// Largest t-reach set under `order`; an upper bound on `col_t(graph)`.
/// Zero for the empty graph.
///
/// # Panics
///
/// If `order` does not cover exactly the vertices of `graph`.
pub fn order_width(graph: &Graph, order: &LinearOrder, t: usize) -> usize {
    assert_eq!(order.len(), graph.vertex_count(), "order and graph sizes differ");
    let mut reacher = Reacher::new(graph.vertex_count());
    (0..graph.vertex_count())
        .map(|v| reacher.reach_size(graph, order, v, t))
        .max()
        .unwrap_or(0)
}

/// Reach size of `v` when exactly the vertices flagged in `after` are ranked
/// after it and everything else except `v` is ranked before it.
pub(crate) fn backreach(reacher: &mut Reacher, graph: &Graph, after: &[bool], v: usize, t: usize) -> usize {
    let mut count = 1;
    reacher.visit(graph, v, t, |y| after[y], |_| count += 1);
    count
}
