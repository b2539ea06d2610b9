//! Generator specs: colon-separated, prefix-form descriptions of graphs.
//!
//! ```text
//! complete:<n>  path:<n>  cycle:<n>  edgeless:<n>  star:<leaves>
//! gnp:<n>:<p>:<seed>      ktree:<k>:<n>:<seed>
//! subdivide:<inner>:<times>   universal:<inner>:<count>
//! product:<ktree-like>:<layers>   square:<inner>
//! ```
//!
//! A seed written as `_` is replaced by the run's default seed. Complete
//! graphs and paths carry their k-tree structure, so they can feed `product`.

use std::str::FromStr;

use dynchroma_core::{
    add_universal, complete_graph, cycle_graph, edgeless_graph, path_graph, random_graph,
    random_k_tree, square, star_graph, strong_product_with_path, subdivide, Graph, KTree, Keep,
};

use crate::meta::Structure;

/// A malformed or unbuildable generator spec.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad generator spec: {0}")]
pub struct SpecError(pub String);

/// A parsed generator spec.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    /// `K_n`.
    Complete(usize),
    /// `P_n`.
    Path(usize),
    /// `C_n`.
    Cycle(usize),
    /// `n` isolated vertices.
    Edgeless(usize),
    /// `K_{1,leaves}`.
    Star(usize),
    /// `G(n, p)`.
    Gnp {
        /// Vertices.
        n: usize,
        /// Edge probability.
        p: f64,
        /// Seed, `None` for the run default.
        seed: Option<u64>,
    },
    /// Random k-tree.
    KTree {
        /// Width.
        k: usize,
        /// Vertices.
        n: usize,
        /// Seed, `None` for the run default.
        seed: Option<u64>,
    },
    /// Uniform subdivision.
    Subdivide(Box<GenSpec>, usize),
    /// Universal vertices appended.
    Universal(Box<GenSpec>, usize),
    /// Strong product of a k-tree with a path.
    Product(Box<GenSpec>, usize),
    /// Square graph.
    Square(Box<GenSpec>),
}

/// A generated graph and whatever structure the generator recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    /// The graph.
    pub graph: Graph,
    /// Structure for the ordering strategies, if known.
    pub structure: Option<Structure>,
}

fn bad(message: impl Into<String>) -> SpecError {
    SpecError(message.into())
}

struct Tokens<'a> {
    items: Vec<&'a str>,
    next: usize,
}

impl<'a> Tokens<'a> {
    fn take(&mut self, what: &str) -> Result<&'a str, SpecError> {
        let token = self
            .items
            .get(self.next)
            .ok_or_else(|| bad(format!("missing {what}")))?;
        self.next += 1;
        Ok(token)
    }

    fn number<T: FromStr>(&mut self, what: &str) -> Result<T, SpecError> {
        let token = self.take(what)?;
        token.parse().map_err(|_| bad(format!("{what} `{token}` is not a valid number")))
    }

    fn seed(&mut self) -> Result<Option<u64>, SpecError> {
        if self.items.get(self.next) == Some(&"_") {
            self.next += 1;
            return Ok(None);
        }
        self.number("seed").map(Some)
    }

    fn spec(&mut self) -> Result<GenSpec, SpecError> {
        let family = self.take("graph family")?;
        let spec = match family {
            "complete" => GenSpec::Complete(self.number("n")?),
            "path" => GenSpec::Path(self.number("n")?),
            "cycle" => GenSpec::Cycle(self.number("n")?),
            "edgeless" => GenSpec::Edgeless(self.number("n")?),
            "star" => GenSpec::Star(self.number("leaves")?),
            "gnp" => GenSpec::Gnp {
                n: self.number("n")?,
                p: self.number("p")?,
                seed: self.seed()?,
            },
            "ktree" => GenSpec::KTree {
                k: self.number("k")?,
                n: self.number("n")?,
                seed: self.seed()?,
            },
            "subdivide" => {
                let inner = self.spec()?;
                GenSpec::Subdivide(Box::new(inner), self.number("times")?)
            }
            "universal" => {
                let inner = self.spec()?;
                GenSpec::Universal(Box::new(inner), self.number("count")?)
            }
            "product" => {
                let inner = self.spec()?;
                GenSpec::Product(Box::new(inner), self.number("layers")?)
            }
            "square" => GenSpec::Square(Box::new(self.spec()?)),
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

impl FromStr for GenSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, SpecError> {
        let mut tokens = Tokens {
            items: text.trim().split(':').collect(),
            next: 0,
        };
        let spec = tokens.spec()?;
        if tokens.next != tokens.items.len() {
            return Err(bad(format!(
                "unexpected trailing `{}`",
                tokens.items[tokens.next..].join(":")
            )));
        }
        Ok(spec)
    }
}

fn clique_tree(n: usize) -> Option<Structure> {
    (n >= 1).then(|| {
        Structure::KTree(KTree {
            graph: complete_graph(n),
            k: n - 1,
            construction_order: (0..n).collect(),
        })
    })
}

impl GenSpec {
    /// Builds the graph; `_` seeds become `default_seed`.
    pub fn build(&self, default_seed: u64) -> Result<Generated, SpecError> {
        let plain = |graph: Graph| Generated { graph, structure: None };
        let generated = match self {
            GenSpec::Complete(n) => Generated {
                graph: complete_graph(*n),
                structure: clique_tree(*n),
            },
            GenSpec::Path(0) => return Err(bad("path needs at least one vertex")),
            GenSpec::Path(n) => {
                let graph = path_graph(*n);
                let structure = if *n == 1 {
                    clique_tree(1)
                } else {
                    Some(Structure::KTree(KTree {
                        graph: graph.clone(),
                        k: 1,
                        construction_order: (0..*n).collect(),
                    }))
                };
                Generated { graph, structure }
            }
            GenSpec::Cycle(n) => plain(cycle_graph(*n)),
            GenSpec::Edgeless(n) => plain(edgeless_graph(*n)),
            GenSpec::Star(leaves) => plain(star_graph(*leaves)),
            GenSpec::Gnp { n, p, seed } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(bad(format!("edge probability {p} outside [0, 1]")));
                }
                plain(random_graph(*n, *p, seed.unwrap_or(default_seed)))
            }
            GenSpec::KTree { k, n, seed } => {
                let kt = random_k_tree(*k, *n, seed.unwrap_or(default_seed)).map_err(|e| bad(e.to_string()))?;
                Generated {
                    graph: kt.graph.clone(),
                    structure: Some(Structure::KTree(kt)),
                }
            }
            GenSpec::Subdivide(inner, times) => {
                if *times == 0 {
                    return Err(bad("subdivide needs at least one vertex per edge"));
                }
                let sg = subdivide(&inner.build(default_seed)?.graph, *times);
                Generated {
                    graph: sg.graph.clone(),
                    structure: Some(Structure::Subdivision(sg)),
                }
            }
            GenSpec::Universal(inner, count) => plain(add_universal(&inner.build(default_seed)?.graph, *count)),
            GenSpec::Product(inner, layers) => {
                if *layers == 0 {
                    return Err(bad("product needs at least one layer"));
                }
                let Some(Structure::KTree(kt)) = inner.build(default_seed)?.structure else {
                    return Err(bad("product needs a k-tree (ktree, complete or path) as its base"));
                };
                let lp = strong_product_with_path(&kt, *layers, Keep::All);
                Generated {
                    graph: lp.graph.clone(),
                    structure: Some(Structure::Product(lp)),
                }
            }
            GenSpec::Square(inner) => plain(square(&inner.build(default_seed)?.graph)),
        };
        Ok(generated)
    }
}
