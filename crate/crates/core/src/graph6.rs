//! graph6 short form (at most 62 vertices).
//!
//! A word is one byte `n + 63` followed by the upper triangle of the
//! adjacency matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte with 63 added and zero padding at the end.

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

fn err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(0, Graph6ErrorKind::Empty));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::InvalidByte(bytes[pos])));
    }
    if first == 126 {
        return Err(err(0, Graph6ErrorKind::LongForm));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, Graph6ErrorKind::ZeroVertices));
    }
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        let offset = expected.min(bytes.len());
        return Err(err(
            offset,
            Graph6ErrorKind::Length {
                expected,
                found: bytes.len(),
            },
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(expected - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    Ok(g)
}

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph6 short form",
            n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads a graph6 corpus: one word per line, blank lines and an optional
/// `>>graph6<<` header ignored. Returns per-line results so callers can
/// report every bad line.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let line = raw.trim_end_matches('\r');
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            if line.trim().is_empty() {
                None
            } else {
                Some((idx + 1, parse_graph6(line)))
            }
        })
        .collect()
}
