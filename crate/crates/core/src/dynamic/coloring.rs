use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Errors for malformed colorings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    /// A vertex carries no color.
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    /// Color indices start at 1.
    #[error("vertex {0} has color 0; colors start at 1")]
    ZeroColor(usize),
    /// The coloring and graph disagree on the vertex count.
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch {
        /// Vertices in the coloring.
        coloring: usize,
        /// Vertices in the graph.
        graph: usize,
    },
}

/// A total vertex coloring with colors `1..=palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    /// Wraps per-vertex colors; every color must be positive.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        let palette = colors.iter().copied().max().unwrap_or(0);
        Ok(Self { colors, palette })
    }

    /// Accepts a partial assignment only when it is in fact total.
    pub fn from_partial(colors: &[Option<usize>]) -> Result<Self, ColoringError> {
        let total = colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::Uncolored(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_colors(total)
    }

    /// Color of `v`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Per-vertex colors.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Largest color used.
    pub fn palette_size(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Number of colored vertices.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// Whether no vertex is colored.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// A vertex whose neighborhood shows too few colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicViolation {
    /// The offending vertex.
    pub vertex: usize,
    /// Distinct colors on its neighbors, ascending.
    pub seen: Vec<usize>,
    /// `min(r, deg(vertex))`.
    pub required: usize,
}

/// Outcome of [`verify_r_dynamic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// The `r` that was checked.
    pub r: usize,
    /// Monochromatic edges `(u, v)` with `u < v`.
    pub proper_violations: Vec<(usize, usize)>,
    /// Vertices failing the neighborhood condition.
    pub dynamic_violations: Vec<DynamicViolation>,
    /// Both lists are empty.
    pub ok: bool,
}

/// Checks that `coloring` is proper and that every vertex sees at least
/// `min(r, deg)` distinct colors on its neighbors.
pub fn verify_r_dynamic(graph: &Graph, coloring: &Coloring, r: usize) -> Result<VerificationReport, ColoringError> {
    if coloring.len() != graph.vertex_count() {
        return Err(ColoringError::SizeMismatch {
            coloring: coloring.len(),
            graph: graph.vertex_count(),
        });
    }
    let proper_violations: Vec<_> = graph
        .edges()
        .filter(|&(u, v)| coloring.color(u) == coloring.color(v))
        .collect();
    let mut dynamic_violations = Vec::new();
    for v in 0..graph.vertex_count() {
        let required = r.min(graph.degree(v));
        let mut seen: Vec<usize> = graph.neighbors(v).iter().map(|&u| coloring.color(u)).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() < required {
            dynamic_violations.push(DynamicViolation { vertex: v, seen, required });
        }
    }
    let ok = proper_violations.is_empty() && dynamic_violations.is_empty();
    Ok(VerificationReport {
        r,
        proper_violations,
        dynamic_violations,
        ok,
    })
}
