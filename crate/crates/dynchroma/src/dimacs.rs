//! DIMACS `.col` graphs: a `p edge <n> <m>` header, `e <u> <v>` lines with
//! 1-based vertices, and `c` comment lines.

use std::fmt::Write;

use dynchroma_core::Graph;

use crate::ParseError;

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("{what} `{token}` is not a nonnegative integer")))
}

/// Parses a DIMACS edge file into a 0-indexed graph.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(ParseError::new(
                            line,
                            format!("expected `p edge <n> <m>`, found format {other:?}"),
                        ))
                    }
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                if tokens.next().is_some() {
                    return Err(ParseError::new(line, "trailing tokens after problem line"));
                }
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(ParseError::new(line, "edge line before problem line"));
                };
                let u = number(tokens.next(), line, "endpoint")?;
                let v = number(tokens.next(), line, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(ParseError::new(line, "trailing tokens after edge"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::new(line, format!("edge {u} {v} outside 1..={n}")));
                }
                if u == v {
                    return Err(ParseError::new(line, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(ParseError::new(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, header_line) = header.ok_or_else(|| ParseError::new(1, "missing problem line"))?;
    if edges.len() != m {
        return Err(ParseError::new(
            header_line,
            format!("header announces {m} edges but {} were listed", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges).expect("endpoints were validated"))
}

/// Writes `graph` as DIMACS with edges in lexicographic order.
pub fn write_dimacs(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
