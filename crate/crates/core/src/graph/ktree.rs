use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{invalid, Graph, GraphError};

/// A k-tree together with the order in which it was built.
///
/// The first `k + 1` entries of `construction_order` form the base clique and
/// every later vertex was attached to a k-clique of the vertices before it.
/// Reading the construction order backwards gives a perfect elimination
/// ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTree {
    /// The underlying graph.
    pub graph: Graph,
    /// Width.
    pub k: usize,
    /// Insertion sequence, base clique first.
    pub construction_order: Vec<usize>,
}

impl KTree {
    /// Checks the k-tree invariants against the recorded construction order.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.graph.vertex_count();
        let k = self.k;
        if n < k + 1 {
            return Err(GraphError::TooFewVertices { k, n });
        }
        if self.construction_order.len() != n {
            return Err(invalid("k-tree", format!(
                "construction order lists {} of {n} vertices",
                self.construction_order.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in self.construction_order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(invalid("k-tree", format!("construction order is not a permutation at {v}")));
            }
            rank[v] = i;
        }
        if !self.graph.is_clique(&self.construction_order[..=k]) {
            return Err(invalid("k-tree", format!("first {} vertices are not a clique", k + 1)));
        }
        for &v in &self.construction_order[k + 1..] {
            let earlier: Vec<usize> = self
                .graph
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| rank[u] < rank[v])
                .collect();
            if earlier.len() != k || !self.graph.is_clique(&earlier) {
                return Err(invalid("k-tree", format!("earlier neighbors of {v} are not a {k}-clique")));
            }
        }
        let expected = k * (k + 1) / 2 + (n - k - 1) * k;
        if self.graph.edge_count() != expected {
            return Err(invalid("k-tree", format!(
                "{} edges, expected {expected}",
                self.graph.edge_count()
            )));
        }
        Ok(())
    }
}

/// Generates a random k-tree on `n` vertices, deterministic for a fixed seed.
///
/// Vertex `i` is the `i`-th vertex inserted. Each new vertex picks a uniformly
/// random (k+1)-clique created so far, drops a uniformly random member and
/// attaches to the remaining k-clique.
pub fn random_k_tree(k: usize, n: usize, seed: u64) -> Result<KTree, GraphError> {
    if n < k + 1 {
        return Err(GraphError::TooFewVertices { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..=k)
        .flat_map(|u| (u + 1..=k).map(move |v| (u, v)))
        .collect();
    let mut cliques: Vec<Vec<usize>> = vec![(0..=k).collect()];
    for v in k + 1..n {
        let mut host = cliques.choose(&mut rng).expect("base clique exists").clone();
        let drop = rand::Rng::gen_range(&mut rng, 0..host.len());
        host.remove(drop);
        edges.extend(host.iter().map(|&u| (u, v)));
        host.push(v);
        cliques.push(host);
    }
    Ok(KTree {
        graph: Graph::from_trusted_edges(n, edges),
        k,
        construction_order: (0..n).collect(),
    })
}
