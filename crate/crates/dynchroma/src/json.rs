//! JSON shapes shared by the CLI and its schemas under `schemas/`.

use dynchroma_core::{
    ChiOutcome, ColNumberResult, Coloring, ColoringError, Graph, GraphError, LinearOrder,
    OrderError, VerificationReport,
};
use serde::{Deserialize, Serialize};

/// `{"n": 3, "edges": [[0, 1], [1, 2]]}` with `u < v` and edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    /// Vertex count.
    pub n: usize,
    /// Edge list.
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(graph: &Graph) -> Self {
        Self {
            n: graph.vertex_count(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(json: &GraphJson) -> Result<Self, GraphError> {
        Graph::from_edges(json.n, json.edges.iter().map(|&[u, v]| (u, v)))
    }
}

/// An order as its vertices from first to last.
pub fn order_to_json(order: &LinearOrder) -> Vec<usize> {
    order.sequence().to_vec()
}

/// Reads an order written by [`order_to_json`].
pub fn order_from_json(sequence: Vec<usize>) -> Result<LinearOrder, OrderError> {
    LinearOrder::from_sequence(sequence)
}

/// `{"t": 2, "value": 3, "method": "exact-dp", "witness": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColNumberJson {
    /// Radius.
    pub t: usize,
    /// Exact value or witness width.
    pub value: usize,
    /// `exact-dp`, `exact-bruteforce` or `upper-bound-only`.
    pub method: String,
    /// Witness order.
    pub witness: Vec<usize>,
}

impl From<&ColNumberResult> for ColNumberJson {
    fn from(result: &ColNumberResult) -> Self {
        Self {
            t: result.t,
            value: result.value,
            method: result.method.as_str().to_owned(),
            witness: order_to_json(&result.witness),
        }
    }
}

/// `{"colors": [c_0, ...], "palette": d}` with colors starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    /// Per-vertex colors.
    pub colors: Vec<usize>,
    /// Largest color.
    pub palette: usize,
}

impl From<&Coloring> for ColoringJson {
    fn from(coloring: &Coloring) -> Self {
        Self {
            colors: coloring.colors().to_vec(),
            palette: coloring.palette_size(),
        }
    }
}

/// Rejection of a coloring file.
#[derive(Debug, thiserror::Error)]
pub enum ColoringFileError {
    /// The colors themselves are invalid.
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    /// `palette` disagrees with the colors.
    #[error("palette {declared} does not match the largest color {actual}")]
    Palette {
        /// Value in the file.
        declared: usize,
        /// Largest listed color.
        actual: usize,
    },
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = ColoringFileError;

    fn try_from(json: ColoringJson) -> Result<Self, ColoringFileError> {
        let coloring = Coloring::from_colors(json.colors)?;
        if coloring.palette_size() != json.palette {
            return Err(ColoringFileError::Palette {
                declared: json.palette,
                actual: coloring.palette_size(),
            });
        }
        Ok(coloring)
    }
}

/// One vertex failing the neighborhood condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicViolationJson {
    /// The vertex.
    pub vertex: usize,
    /// Distinct neighbor colors.
    pub seen: Vec<usize>,
    /// `min(r, deg)`.
    pub required: usize,
}

/// Serialized [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    /// Checked `r`.
    pub r: usize,
    /// No violations at all.
    pub ok: bool,
    /// Monochromatic edges.
    pub proper_violations: Vec<[usize; 2]>,
    /// Neighborhood violations.
    pub dynamic_violations: Vec<DynamicViolationJson>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(report: &VerificationReport) -> Self {
        Self {
            r: report.r,
            ok: report.ok,
            proper_violations: report.proper_violations.iter().map(|&(u, v)| [u, v]).collect(),
            dynamic_violations: report
                .dynamic_violations
                .iter()
                .map(|d| DynamicViolationJson {
                    vertex: d.vertex,
                    seen: d.seen.clone(),
                    required: d.required,
                })
                .collect(),
        }
    }
}

/// Output of `dynchroma order`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderReportJson {
    /// Strategy name.
    pub strategy: String,
    /// Requested radius.
    pub t: usize,
    /// Witness order.
    pub order: Vec<usize>,
    /// Width at radius `t`.
    pub width: usize,
    /// Width at radius 2.
    pub width_2: usize,
    /// Coloring-number result for radius `t`.
    pub col: ColNumberJson,
}

/// Output of `dynchroma color`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColorReportJson {
    /// Requested `r`.
    pub r: usize,
    /// Where the order came from.
    pub order_source: String,
    /// 2-reach width of the order.
    pub width_2: usize,
    /// Palette guarantee for that width: `(w - 1)r + 1`, or `w` when `r = 0`.
    pub bound: usize,
    /// Palette actually used.
    pub palette: usize,
    /// The coloring.
    pub coloring: ColoringJson,
    /// Verification of the coloring.
    pub verification: ReportJson,
}

/// Output of `dynchroma exact`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExactReportJson {
    /// Requested `r`.
    pub r: usize,
    /// `exact`, `unknown` or `lower-bound-only`.
    pub status: String,
    /// The r-dynamic chromatic number, when known.
    pub value: Option<usize>,
    /// Best lower bound.
    pub lower: usize,
    /// Best upper bound, when one is known.
    pub upper: Option<usize>,
    /// Coloring attaining `upper`.
    pub coloring: Option<ColoringJson>,
}

impl ExactReportJson {
    /// Summarizes a solver outcome.
    pub fn new(r: usize, outcome: &ChiOutcome) -> Self {
        match outcome {
            ChiOutcome::Exact { value, coloring } => Self {
                r,
                status: "exact".into(),
                value: Some(*value),
                lower: *value,
                upper: Some(*value),
                coloring: Some(coloring.into()),
            },
            ChiOutcome::Unknown { lower, upper, witness } => Self {
                r,
                status: "unknown".into(),
                value: None,
                lower: *lower,
                upper: Some(*upper),
                coloring: Some(witness.into()),
            },
            ChiOutcome::LowerBoundOnly { lower } => Self {
                r,
                status: "lower-bound-only".into(),
                value: None,
                lower: *lower,
                upper: None,
                coloring: None,
            },
        }
    }
}
