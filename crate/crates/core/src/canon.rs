//! Brute-force canonical labelling and isomorphism-class enumeration for
//! small graphs.
//!
//! The canonical form is the relabelling whose graph6 bit string (upper
//! triangle, column-major) is lexicographically smallest among all
//! relabellings that list vertices by non-increasing degree. The degree
//! restriction is isomorphism-invariant, so the form is still canonical; it
//! only shrinks the search. A branch-and-bound over positions prunes every
//! partial labelling whose prefix already exceeds the best one found.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::serialize_graph6;

pub const MAX_CANON_ORDER: usize = 10;
pub const MAX_ENUM_ORDER: usize = 7;
/// Enumeration of order 8 (12346 classes) is available but opt-in.
pub const MAX_ENUM_ORDER_EXTENDED: usize = 8;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// Required degree at each position.
    slot_degree: Vec<usize>,
    degree: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64, len: u32) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] || self.degree[v] != self.slot_degree[pos] {
                continue;
            }
            let mut bits = prefix;
            for &u in &self.order {
                bits = bits << 1 | self.g.has_edge(u, v) as u64;
            }
            let new_len = len + pos as u32;
            if let Some((best, _)) = &self.best {
                let best_prefix = best >> (self.total_bits - new_len);
                if bits > best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, bits, new_len);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Returns `(encoding, order)` where `order[p]` is the vertex placed at
/// position `p`.
fn canonical_labelling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical form",
            n,
            max: MAX_CANON_ORDER,
        });
    }
    let degree = g.degrees();
    let mut slot_degree = degree.clone();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let mut search = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        slot_degree,
        degree,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0, 0);
    Ok(search.best.expect("at least one labelling exists"))
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labelling(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permuted(&perm))
}

/// graph6 word of the canonical form.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    serialize_graph6(&canonical_form(g)?)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > MAX_CANON_ORDER {
            return Err(Error::UnsupportedSize {
                what: "isomorphism test",
                n: x.order(),
                max: MAX_CANON_ORDER,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_labelling(g)?.0 == canonical_labelling(h)?.0)
}

/// One representative per isomorphism class on `n ≤ 7` vertices, sorted by
/// canonical graph6 word.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_up_to(n, MAX_ENUM_ORDER)
}

/// Like [`enumerate_graphs`] with an explicit order cap (at most 8).
pub fn enumerate_graphs_up_to(n: usize, cap: usize) -> Result<Vec<Graph>> {
    let cap = cap.min(MAX_ENUM_ORDER_EXTENDED);
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::UnsupportedSize {
            what: "graph enumeration",
            n,
            max: cap,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        level = extend_by_one_vertex(&level, m)?;
    }
    Ok(level)
}

/// Every graph on `m` vertices arises by attaching a new vertex to some graph
/// on `m - 1` vertices, so extending each class representative by every
/// neighbourhood and deduplicating yields all classes.
fn extend_by_one_vertex(smaller: &[Graph], m: usize) -> Result<Vec<Graph>> {
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    for base in smaller {
        let edges = base.edges();
        for mask in 0u32..(1 << (m - 1)) {
            let mut all = edges.clone();
            all.extend(
                (0..m - 1)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i, m - 1)),
            );
            let g = Graph::from_edge_list(m, &all)?;
            let c = canonical_form(&g)?;
            classes.entry(serialize_graph6(&c)?).or_insert(c);
        }
    }
    Ok(classes.into_values().collect())
}
