use alloc::format;
use alloc::vec::Vec;

use super::{invalid, Graph, GraphError};

/// Where a vertex of a subdivided graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// A vertex of the source graph; keeps its index.
    Original,
    /// An interior vertex of the path replacing source edge `edge` (`u < v`).
    Subdivision {
        /// The source edge this vertex lies on.
        edge: (usize, usize),
    },
}

/// A graph obtained by replacing every edge of a source graph with a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdividedGraph {
    /// The subdivided graph.
    pub graph: Graph,
    /// Per-vertex origin tag.
    pub origins: Vec<Origin>,
    /// Interior vertices per source edge.
    pub times: usize,
}

impl SubdividedGraph {
    /// Number of vertices inherited from the source graph.
    pub fn original_count(&self) -> usize {
        self.origins
            .iter()
            .filter(|o| matches!(o, Origin::Original))
            .count()
    }

    /// Contracts every subdivision path back into a single edge.
    pub fn contract(&self) -> Graph {
        let n = self.original_count();
        let edges = self.origins.iter().filter_map(|o| match o {
            Origin::Subdivision { edge } => Some(*edge),
            Origin::Original => None,
        });
        Graph::from_trusted_edges(n, edges)
    }

    /// Checks that originals form a prefix, subdivision vertices have degree
    /// two, and every subdivision path joins the endpoints of its tag.
    pub fn validate(&self) -> Result<(), GraphError> {
        let g = &self.graph;
        if self.origins.len() != g.vertex_count() {
            return Err(invalid("subdivision", format!(
                "{} origin tags for {} vertices",
                self.origins.len(),
                g.vertex_count()
            )));
        }
        let n = self.original_count();
        if self.origins[..n].iter().any(|o| *o != Origin::Original) {
            return Err(invalid("subdivision", "original vertices must precede subdivision vertices".into()));
        }
        for (v, origin) in self.origins.iter().enumerate().skip(n) {
            let Origin::Subdivision { edge: (a, b) } = *origin else {
                unreachable!()
            };
            if g.degree(v) != 2 {
                return Err(invalid("subdivision", format!("subdivision vertex {v} has degree {}", g.degree(v))));
            }
            for &w in g.neighbors(v) {
                let ok = match self.origins[w] {
                    Origin::Original => w == a || w == b,
                    Origin::Subdivision { edge } => edge == (a, b),
                };
                if !ok {
                    return Err(invalid("subdivision", format!("vertex {v} on edge {a}-{b} touches {w}")));
                }
            }
        }
        let expected = self.contract();
        let mut per_edge = alloc::collections::BTreeMap::new();
        for o in &self.origins {
            if let Origin::Subdivision { edge } = o {
                *per_edge.entry(*edge).or_insert(0usize) += 1;
            }
        }
        if per_edge.values().any(|&c| c != self.times)
            || g.edge_count() != (self.times + 1) * expected.edge_count()
        {
            return Err(invalid("subdivision", format!("paths do not all carry {} interior vertices", self.times)));
        }
        Ok(())
    }
}

/// Replaces every edge `uv` of `source` with a path carrying `times` new
/// interior vertices.
///
/// New vertices are appended after the originals, grouped by source edge in
/// lexicographic order, each group listed from the `u` side to the `v` side.
/// `times == 0` returns the source graph with every vertex tagged original.
pub fn subdivide(source: &Graph, times: usize) -> SubdividedGraph {
    let n = source.vertex_count();
    let mut origins = alloc::vec![Origin::Original; n];
    let mut edges = Vec::with_capacity((times + 1) * source.edge_count());
    for (u, v) in source.edges() {
        if times == 0 {
            edges.push((u, v));
            continue;
        }
        let first = origins.len();
        origins.extend(core::iter::repeat_n(Origin::Subdivision { edge: (u, v) }, times));
        edges.push((u, first));
        edges.extend((first + 1..first + times).map(|s| (s - 1, s)));
        edges.push((first + times - 1, v));
    }
    let graph = Graph::from_trusted_edges(origins.len(), edges);
    SubdividedGraph { graph, origins, times }
}
