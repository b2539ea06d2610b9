//! Plain edge lists: one `u v` pair of 0-based vertices per line. Blank lines
//! and lines starting with `#` are skipped; the vertex count is the largest
//! index plus one.

use dynchroma_core::{Graph, GraphError};

use crate::ParseError;

/// Parses an edge list.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut n = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line, format!("expected `u v`, found {} tokens", tokens.len())));
        }
        let mut pair = [0usize; 2];
        for (slot, token) in pair.iter_mut().zip(&tokens) {
            *slot = token
                .parse()
                .map_err(|_| ParseError::new(line, format!("`{token}` is not a nonnegative integer")))?;
        }
        n = n.max(pair[0] + 1).max(pair[1] + 1);
        edges.push((pair[0], pair[1]));
        lines.push(line);
    }
    Graph::from_edges(n, edges.iter().copied()).map_err(|err| {
        let bad = |u: usize| edges.iter().position(|&(a, b)| a == u && b == u);
        let line = match err {
            GraphError::SelfLoop(u) => bad(u).map_or(0, |i| lines[i]),
            _ => 0,
        };
        ParseError::new(line, err.to_string())
    })
}
