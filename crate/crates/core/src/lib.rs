//! Exact signless-Laplacian walk matrices of graphs and their rooted products
//! with paths, determinant identities, and arithmetic certificates for graphs
//! determined by their generalized Q-spectrum (DGQS).

pub mod algebra;
pub mod canon;
pub mod certify;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod json;
pub mod oracle;
pub mod rooted;
pub mod walk;

pub use algebra::{IntMatrix, IntPolynomial};
pub use error::{Error, Result};
pub use graph::Graph;
