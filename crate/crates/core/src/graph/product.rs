use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{invalid, Graph, GraphError, KTree};

/// A subgraph of `H ⊠ P_m` where `H` is a k-tree, with each vertex's layer
/// (`1..=m`) and its projection onto `V(H)` recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredProduct {
    /// The product subgraph.
    pub graph: Graph,
    /// The k-tree `H`.
    pub base: KTree,
    /// Number of layers `m`.
    pub layers: usize,
    /// Per-vertex layer index in `1..=layers`.
    pub layer: Vec<usize>,
    /// Per-vertex image in `V(H)`.
    pub projection: Vec<usize>,
}

/// Which part of `H ⊠ P_m` to keep.
pub enum Keep<'a> {
    /// The full product.
    All,
    /// Only vertices `(x, layer)` and edges accepted by the predicates. Edges
    /// are offered only when both endpoints were kept.
    Subgraph {
        /// Vertex filter over `(projection, layer)`.
        vertex: &'a dyn Fn(usize, usize) -> bool,
        /// Edge filter over two `(projection, layer)` endpoints.
        edge: &'a dyn Fn((usize, usize), (usize, usize)) -> bool,
    },
}

impl LayeredProduct {
    /// The vertices in layer `i`.
    pub fn layer_members(&self, i: usize) -> Vec<usize> {
        (0..self.layer.len()).filter(|&v| self.layer[v] == i).collect()
    }

    /// All copies of the base vertex `x`.
    pub fn copies_of(&self, x: usize) -> Vec<usize> {
        (0..self.projection.len())
            .filter(|&v| self.projection[v] == x)
            .collect()
    }

    /// Checks that every edge respects the layering and projects onto a
    /// vertex or an edge of the base, and that vertices are distinct product
    /// positions.
    pub fn validate(&self) -> Result<(), GraphError> {
        self.base.validate()?;
        let n = self.graph.vertex_count();
        if self.layer.len() != n || self.projection.len() != n {
            return Err(invalid("layered product", format!("maps do not cover {n} vertices")));
        }
        let h = &self.base.graph;
        let mut seen = BTreeSet::new();
        for v in 0..n {
            let (x, i) = (self.projection[v], self.layer[v]);
            if x >= h.vertex_count() || i == 0 || i > self.layers {
                return Err(invalid("layered product", format!("vertex {v} maps outside H x P")));
            }
            if !seen.insert((x, i)) {
                return Err(invalid("layered product", format!("two vertices map to ({x}, {i})")));
            }
        }
        for (a, b) in self.graph.edges() {
            let (xa, xb) = (self.projection[a], self.projection[b]);
            let gap = self.layer[a].abs_diff(self.layer[b]);
            if gap > 1 || (xa == xb && gap == 0) || (xa != xb && !h.has_edge(xa, xb)) {
                return Err(invalid("layered product", format!("edge {a}-{b} is not a product edge")));
            }
        }
        Ok(())
    }
}

/// Builds `H ⊠ P_layers` (or the part selected by `keep`).
///
/// Vertices are numbered layer by layer, and within a layer by base vertex.
pub fn strong_product_with_path(base: &KTree, layers: usize, keep: Keep<'_>) -> LayeredProduct {
    let h = &base.graph;
    let width = h.vertex_count();
    let keep_vertex = |x: usize, i: usize| match &keep {
        Keep::All => true,
        Keep::Subgraph { vertex, .. } => vertex(x, i),
    };
    let keep_edge = |a: (usize, usize), b: (usize, usize)| match &keep {
        Keep::All => true,
        Keep::Subgraph { edge, .. } => edge(a, b),
    };

    let mut index = vec![usize::MAX; width * layers];
    let mut layer = Vec::new();
    let mut projection = Vec::new();
    for i in 1..=layers {
        for x in 0..width {
            if keep_vertex(x, i) {
                index[(i - 1) * width + x] = layer.len();
                layer.push(i);
                projection.push(x);
            }
        }
    }
    let id = |x: usize, i: usize| index[(i - 1) * width + x];

    let mut edges = Vec::new();
    let mut push = |a: (usize, usize), b: (usize, usize)| {
        let (u, v) = (id(a.0, a.1), id(b.0, b.1));
        if u != usize::MAX && v != usize::MAX && keep_edge(a, b) {
            edges.push((u, v));
        }
    };
    for i in 1..=layers {
        for x in 0..width {
            if i < layers {
                push((x, i), (x, i + 1));
            }
            for &y in h.neighbors(x) {
                if x < y {
                    push((x, i), (y, i));
                }
                if i < layers {
                    push((x, i), (y, i + 1));
                }
            }
        }
    }
    LayeredProduct {
        graph: Graph::from_trusted_edges(layer.len(), edges),
        base: base.clone(),
        layers,
        layer,
        projection,
    }
}
