//! Simple undirected graphs stored as a symmetric adjacency bitset.

use std::fmt;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built; every constructor enforces symmetry and
/// the absence of loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                g.set_edge(i, j);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges)
    }

    /// Builds a graph from an edge list; duplicates and reversed pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::LoopEdge { vertex: i });
            }
            g.set_edge(i, j);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Neighbours of `i` in increasing order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                self.neighbors(i)
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| self.neighbors(i).collect()).collect()
    }

    /// The complement graph: `A(Ḡ) = J − I − A(G)`.
    pub fn complement(&self) -> Graph {
        let mut h = Graph {
            n: self.n,
            words: self.words,
            bits: vec![0; self.bits.len()],
        };
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    h.set_edge(i, j);
                }
            }
        }
        h
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must match the order"
        );
        let mut h = Graph {
            n: self.n,
            words: self.words,
            bits: vec![0; self.bits.len()],
        };
        for (i, j) in self.edges() {
            h.set_edge(perm[i], perm[j]);
        }
        h
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            BigInt::from(self.has_edge(i, j) as u8)
        })
    }

    /// The signless Laplacian `Q = D + A`.
    pub fn signless_laplacian(&self) -> IntMatrix {
        let deg = self.degrees();
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                BigInt::from(deg[i])
            } else {
                BigInt::from(self.has_edge(i, j) as u8)
            }
        })
    }

    /// A stable identifier: canonical graph6 up to 10 vertices, plain graph6
    /// up to 62, and a digest of the edge list beyond that.
    pub fn id(&self) -> String {
        if self.n <= crate::canon::MAX_CANON_ORDER {
            if let Ok(c) = crate::canon::canonical_form(self) {
                if let Ok(s) = crate::graph6::serialize_graph6(&c) {
                    return s;
                }
            }
        }
        if let Ok(s) = crate::graph6::serialize_graph6(self) {
            return s;
        }
        let digest = Sha256::digest(crate::edgelist::write_edge_list(self).as_bytes());
        let hex: String = digest.iter().take(12).map(|b| format!("{b:02x}")).collect();
        format!("edges:{}:{hex}", self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(p3.degrees(), vec![1, 2, 1]);

        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(paw.edge_count(), 4);
        assert_eq!(paw.degrees(), vec![1, 3, 2, 2]);

        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edges(), vec![(0, 1)]);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::LoopEdge { vertex: 1 })
        ));
        assert!(matches!(
            Graph::from_edge_list(0, &[]),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn complement_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.complement(), k1);
        assert_eq!(
            Graph::complete(3).unwrap().complement(),
            Graph::empty(3).unwrap()
        );
        // P4 is self-complementary under the relabelling 0→1, 1→3, 2→0, 3→2.
        let p4 = Graph::path(4).unwrap();
        let c = p4.complement();
        assert_eq!(c.edge_count(), 3);
        assert_eq!(p4.permuted(&[1, 3, 0, 2]), c);
    }

    #[test]
    fn signless_laplacian_examples() {
        let q = Graph::complete(1).unwrap().signless_laplacian();
        assert_eq!(q, IntMatrix::from_i64(&[&[0]]));
        let q = Graph::complete(2).unwrap().signless_laplacian();
        assert_eq!(q, IntMatrix::from_i64(&[&[1, 1], &[1, 1]]));
        let q = Graph::path(3).unwrap().signless_laplacian();
        assert_eq!(
            q,
            IntMatrix::from_i64(&[&[1, 1, 0], &[1, 2, 1], &[0, 1, 1]])
        );
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let n = 130;
        let g = Graph::cycle(n).unwrap();
        assert_eq!(g.edge_count(), n);
        assert!(g.has_edge(63, 64));
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert!(g.id().starts_with("edges:130:"));
    }
}
