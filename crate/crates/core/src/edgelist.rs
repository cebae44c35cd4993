//! Plain-text edge lists: a header line `n m` followed by `m` lines `i j`.
//!
//! Used for graphs too large for graph6 short form. A file may hold several
//! such blocks back to back.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted from text; matches the tower construction cap.
pub const MAX_EDGE_LIST_ORDER: usize = 10_000;

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| bad(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| bad(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(bad(line_no, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses one or more edge-list blocks.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = significant_lines(text);
    let mut graphs = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let (n, m) = two_numbers(line_no, header)?;
        if n == 0 {
            return Err(bad(line_no, "graphs must have at least one vertex"));
        }
        if n > MAX_EDGE_LIST_ORDER {
            return Err(bad(
                line_no,
                format!("order {n} exceeds {MAX_EDGE_LIST_ORDER}"),
            ));
        }
        let mut edges = Vec::with_capacity(m.min(1 << 20));
        for k in 0..m {
            let (edge_line, body) = lines
                .next()
                .ok_or_else(|| bad(line_no, format!("header promises {m} edges, found {k}")))?;
            let (i, j) = two_numbers(edge_line, body)?;
            if i >= n || j >= n {
                return Err(bad(edge_line, format!("vertex out of range for n = {n}")));
            }
            if i == j {
                return Err(bad(edge_line, format!("loop at vertex {i}")));
            }
            edges.push((i, j));
        }
        graphs.push(Graph::from_edge_list(n, &edges)?);
    }
    Ok(graphs)
}

/// Parses exactly one edge-list block.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(bad(1, "no graph found")),
        k => Err(bad(1, format!("expected one graph, found {k}"))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (i, j) in edges {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// True when the first significant line looks like an edge-list header.
pub fn looks_like_edge_list(text: &str) -> bool {
    significant_lines(text)
        .next()
        .map(|(n, l)| two_numbers(n, l).is_ok())
        .unwrap_or(false)
}
