//! File formats, generator specs and the command-line front end for
//! `dynchroma-core`.
//!
//! - [`dimacs`] and [`edge_list`] read and write plain graph files.
//! - [`json`] holds the JSON shapes for graphs, orders, colorings and reports.
//! - [`meta`] is the `.meta.json` sidecar that carries k-tree, subdivision
//!   and layered-product structure next to a graph file.
//! - [`genspec`] parses generator specs such as `subdivide:complete:5:1`.

pub mod dimacs;
pub mod edge_list;
pub mod genspec;
pub mod json;
pub mod meta;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use edge_list::parse_edge_list;
pub use genspec::{GenSpec, Generated, SpecError};
pub use meta::{Sidecar, Structure};

/// A syntax error in a text graph format, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line of the offending input.
    pub line: usize,
    /// What went wrong.
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}
