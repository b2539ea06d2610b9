//! Sidecar metadata for structured graphs.
//!
//! DIMACS files stay standard; any structure a generator knows about is
//! written to `<graph file>.meta.json` instead:
//!
//! ```json
//! {"family": "ktree", "k": 2, "construction_order": [0, 1, 2, 3]}
//! {"family": "subdivision", "times": 1, "origins": [null, null, [0, 1]]}
//! {"family": "product", "layers": 2, "layer": [...], "projection": [...],
//!  "base": {"n": 2, "edges": [[0, 1]], "k": 1, "construction_order": [0, 1]}}
//! ```

use std::path::{Path, PathBuf};

use dynchroma_core::{Graph, GraphError, KTree, LayeredProduct, Origin, SubdividedGraph};
use serde::{Deserialize, Serialize};

use crate::json::GraphJson;

/// Structure known about a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// The graph is a k-tree with a recorded construction order.
    KTree(KTree),
    /// The graph is a uniform subdivision.
    Subdivision(SubdividedGraph),
    /// The graph is a subgraph of a k-tree times a path.
    Product(LayeredProduct),
}

impl Structure {
    /// The graph the structure describes.
    pub fn graph(&self) -> &Graph {
        match self {
            Structure::KTree(kt) => &kt.graph,
            Structure::Subdivision(sg) => &sg.graph,
            Structure::Product(lp) => &lp.graph,
        }
    }

    /// Family name as written in the sidecar.
    pub fn family(&self) -> &'static str {
        match self {
            Structure::KTree(_) => "ktree",
            Structure::Subdivision(_) => "subdivision",
            Structure::Product(_) => "product",
        }
    }
}

/// Base k-tree of a product sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseJson {
    /// Graph of the base.
    #[serde(flatten)]
    pub graph: GraphJson,
    /// Width.
    pub k: usize,
    /// Construction order of the base.
    pub construction_order: Vec<usize>,
}

/// The `.meta.json` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Sidecar {
    /// k-tree metadata.
    Ktree {
        /// Width.
        k: usize,
        /// Construction order, base clique first.
        construction_order: Vec<usize>,
    },
    /// Subdivision metadata.
    Subdivision {
        /// Interior vertices per source edge.
        times: usize,
        /// `null` for original vertices, the source edge otherwise.
        origins: Vec<Option<[usize; 2]>>,
    },
    /// Layered product metadata.
    Product {
        /// Number of layers.
        layers: usize,
        /// Per-vertex layer in `1..=layers`.
        layer: Vec<usize>,
        /// Per-vertex base vertex.
        projection: Vec<usize>,
        /// The base k-tree.
        base: BaseJson,
    },
}

/// Why a sidecar could not be applied to a graph.
#[derive(Debug, thiserror::Error)]
pub enum MetaError {
    /// The metadata does not describe the graph.
    #[error("sidecar does not match the graph: {0}")]
    Invalid(#[from] GraphError),
    /// The sidecar was not readable JSON.
    #[error("malformed sidecar: {0}")]
    Json(#[from] serde_json::Error),
    /// Filesystem failure.
    #[error("{path}: {source}")]
    Io {
        /// Path being read.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
}

impl From<&Structure> for Sidecar {
    fn from(structure: &Structure) -> Self {
        match structure {
            Structure::KTree(kt) => Sidecar::Ktree {
                k: kt.k,
                construction_order: kt.construction_order.clone(),
            },
            Structure::Subdivision(sg) => Sidecar::Subdivision {
                times: sg.times,
                origins: sg
                    .origins
                    .iter()
                    .map(|o| match o {
                        Origin::Original => None,
                        Origin::Subdivision { edge: (u, v) } => Some([*u, *v]),
                    })
                    .collect(),
            },
            Structure::Product(lp) => Sidecar::Product {
                layers: lp.layers,
                layer: lp.layer.clone(),
                projection: lp.projection.clone(),
                base: BaseJson {
                    graph: GraphJson::from(&lp.base.graph),
                    k: lp.base.k,
                    construction_order: lp.base.construction_order.clone(),
                },
            },
        }
    }
}

impl Sidecar {
    /// Attaches the metadata to `graph` and validates the result.
    pub fn attach(self, graph: Graph) -> Result<Structure, MetaError> {
        let structure = match self {
            Sidecar::Ktree { k, construction_order } => {
                let kt = KTree { graph, k, construction_order };
                kt.validate()?;
                Structure::KTree(kt)
            }
            Sidecar::Subdivision { times, origins } => {
                let origins = origins
                    .into_iter()
                    .map(|o| match o {
                        None => Origin::Original,
                        Some([u, v]) => Origin::Subdivision { edge: (u.min(v), u.max(v)) },
                    })
                    .collect();
                let sg = SubdividedGraph { graph, origins, times };
                sg.validate()?;
                Structure::Subdivision(sg)
            }
            Sidecar::Product { layers, layer, projection, base } => {
                let base_graph = Graph::try_from(&base.graph)?;
                let lp = LayeredProduct {
                    graph,
                    base: KTree {
                        graph: base_graph,
                        k: base.k,
                        construction_order: base.construction_order,
                    },
                    layers,
                    layer,
                    projection,
                };
                lp.validate()?;
                Structure::Product(lp)
            }
        };
        Ok(structure)
    }
}

/// `<graph path>.meta.json`.
pub fn sidecar_path(graph_path: &Path) -> PathBuf {
    let mut name = graph_path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Loads and validates the sidecar next to `graph_path`, if there is one.
pub fn load_sidecar(graph_path: &Path, graph: &Graph) -> Result<Option<Structure>, MetaError> {
    let path = sidecar_path(graph_path);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|source| MetaError::Io { path, source })?;
    let sidecar: Sidecar = serde_json::from_str(&text)?;
    sidecar.attach(graph.clone()).map(Some)
}
