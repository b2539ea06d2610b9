//! Simple undirected graphs and the generators used throughout the crate.
//!
//! Vertices are the contiguous indices `0..n`. Adjacency lists are sorted and
//! deduplicated, and a [`Graph`] never changes after construction.

mod ktree;
mod product;
mod subdivision;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use ktree::{random_k_tree, KTree};
pub use product::{strong_product_with_path, Keep, LayeredProduct};
pub use subdivision::{subdivide, Origin, SubdividedGraph};

/// Errors raised while building or validating graphs and structured graphs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// An edge references a vertex outside `0..n`.
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange {
        /// First endpoint.
        u: usize,
        /// Second endpoint.
        v: usize,
        /// Vertex count of the graph being built.
        n: usize,
    },
    /// A k-tree was requested with fewer than `k + 1` vertices.
    #[error("a {k}-tree needs at least {} vertices, got {n}", k + 1)]
    TooFewVertices {
        /// Requested width.
        k: usize,
        /// Requested vertex count.
        n: usize,
    },
    /// A structured graph failed its invariant check.
    #[error("invalid {kind}: {reason}")]
    InvalidStructure {
        /// Which structure was checked.
        kind: &'static str,
        /// Human readable description of the first violation.
        reason: String,
    },
}

pub(crate) fn invalid(kind: &'static str, reason: String) -> GraphError {
    GraphError::InvalidStructure { kind, reason }
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    ///
    /// Rejects self-loops and out-of-range endpoints, reporting the first
    /// offending pair.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// Builds a graph from pairs that are known to be valid.
    pub(crate) fn from_trusted_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("generator produced an invalid edge")
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum degree, zero for graphs without vertices.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `uv` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Whether every vertex in `set` is adjacent to every other one.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Re-checks the representation invariants: no loops, sorted duplicate
    /// free symmetric adjacency and a consistent edge count.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        let mut total = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            total += list.len();
            if !list.windows(2).all(|w| w[0] < w[1]) {
                return Err(invalid("graph", alloc::format!("adjacency of {u} is not strictly sorted")));
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { u, v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(invalid("graph", alloc::format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        if total != 2 * self.edge_count {
            return Err(invalid("graph", String::from("edge count disagrees with adjacency")));
        }
        Ok(())
    }
}

/// `n` isolated vertices.
pub fn edgeless_graph(n: usize) -> Graph {
    Graph::from_trusted_edges(n, core::iter::empty())
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    Graph::from_trusted_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The path `P_n` with edges `(i, i + 1)`.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_trusted_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n`. For `n < 3` this degenerates to a path.
pub fn cycle_graph(n: usize) -> Graph {
    let closing = (n >= 3).then(|| (n - 1, 0));
    Graph::from_trusted_edges(n, (1..n).map(|i| (i - 1, i)).chain(closing))
}

/// The star `K_{1,leaves}` with center `0`.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_trusted_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Erdős–Rényi `G(n, p)`, deterministic for a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_trusted_edges(n, edges)
}

/// Appends `count` vertices, each adjacent to every other vertex (including
/// the other added vertices).
pub fn add_universal(graph: &Graph, count: usize) -> Graph {
    let n = graph.vertex_count();
    let total = n + count;
    let added = (n..total).flat_map(|w| (0..w).map(move |u| (u, w)));
    Graph::from_trusted_edges(total, graph.edges().chain(added))
}

/// The square: `uv` is an edge iff `1 <= dist(u, v) <= 2`.
pub fn square(graph: &Graph) -> Graph {
    let n = graph.vertex_count();
    let mut edges = Vec::new();
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        mark[u] = u;
        for &v in graph.neighbors(u) {
            for w in core::iter::once(v).chain(graph.neighbors(v).iter().copied()) {
                if mark[w] != u {
                    mark[w] = u;
                    if u < w {
                        edges.push((u, w));
                    }
                }
            }
        }
    }
    Graph::from_trusted_edges(n, edges)
}
