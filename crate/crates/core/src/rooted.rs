//! Rooted products `G∘P_k` with a path rooted at an endpoint, iterated
//! towers, and the path polynomials that govern their spectra.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{IntMatrix, IntPolynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Towers are never built beyond this many vertices.
pub const TOWER_VERTEX_CAP: usize = 10_000;

/// `G∘P_k` in level-major order: vertex `s·n + i` is the copy of `u_i` at
/// path position `s` (0-based), so level 0 carries `G` itself.
pub fn rooted_product_path(g: &Graph, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "path length k must be >= 2, got {k}"
        )));
    }
    let n = g.order();
    let order =
        n.checked_mul(k)
            .filter(|&v| v <= TOWER_VERTEX_CAP)
            .ok_or(Error::TowerTooLarge {
                vertices: n.saturating_mul(k),
                cap: TOWER_VERTEX_CAP,
            })?;
    let mut edges = g.edges();
    for s in 0..k - 1 {
        edges.extend((0..n).map(|i| (s * n + i, (s + 1) * n + i)));
    }
    Graph::from_edge_list(order, &edges)
}

/// Vertex count of `G∘P_k^t`, or `None` on overflow.
pub fn tower_order(n: usize, k: usize, t: u32) -> Option<usize> {
    k.checked_pow(t).and_then(|f| f.checked_mul(n))
}

/// `G∘P_k^t`: `t` successive rooted products with `P_k`; `t = 0` gives `G`.
pub fn rooted_tower(g: &Graph, k: usize, t: u32) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "path length k must be >= 2, got {k}"
        )));
    }
    match tower_order(g.order(), k, t) {
        Some(v) if v <= TOWER_VERTEX_CAP => {}
        other => {
            return Err(Error::TowerTooLarge {
                vertices: other.unwrap_or(usize::MAX),
                cap: TOWER_VERTEX_CAP,
            })
        }
    }
    let mut out = g.clone();
    for _ in 0..t {
        out = rooted_product_path(&out, k)?;
    }
    Ok(out)
}

/// Characteristic polynomials of the two tridiagonal path matrices for a
/// path of length `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathPolys {
    pub k: usize,
    /// `a_{k−1}(t)`, degree `k − 1`.
    pub a: IntPolynomial,
    /// `b_k(t)`, degree `k`.
    pub b: IntPolynomial,
    /// `f_k(t) = a_0 + a_1 + … + a_{k−1}`, degree `k − 1`.
    pub f: IntPolynomial,
}

/// `a_0, …, a_m` from `a_0 = 1`, `a_1 = t − 1`, `a_j = (t − 2)a_{j−1} − a_{j−2}`.
fn a_sequence(m: usize) -> Vec<IntPolynomial> {
    let mut seq = vec![IntPolynomial::one()];
    if m >= 1 {
        seq.push(IntPolynomial::from_i64(&[-1, 1]));
    }
    let t_minus_2 = IntPolynomial::from_i64(&[-2, 1]);
    for j in 2..=m {
        let next = &(&t_minus_2 * &seq[j - 1]) - &seq[j - 2];
        seq.push(next);
    }
    seq
}

pub fn path_char_polys(k: usize) -> Result<PathPolys> {
    if k < 1 {
        return Err(Error::InvalidArgument("path length k must be >= 1".into()));
    }
    let a_seq = a_sequence(k - 1);
    let a = a_seq[k - 1].clone();
    // b_1 = t − 1; b_k = (t − 1)a_{k−1} − a_{k−2} for k ≥ 2.
    let t_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    let b = if k == 1 {
        t_minus_1
    } else {
        &(&t_minus_1 * &a) - &a_seq[k - 2]
    };
    let f = a_seq.iter().fold(IntPolynomial::zero(), |acc, p| &acc + p);
    Ok(PathPolys { k, a, b, f })
}

/// The `(k−1)×(k−1)` matrix with diagonal `2, …, 2, 1` and unit
/// off-diagonals; `None` when `k = 1`.
pub fn path_matrix_a(k: usize) -> Option<IntMatrix> {
    let m = k.checked_sub(1).filter(|&m| m > 0)?;
    Some(tridiagonal(m, |i| if i + 1 == m { 1 } else { 2 }))
}

/// The `k×k` matrix with diagonal `1, 2, …, 2, 1` and unit off-diagonals.
pub fn path_matrix_b(k: usize) -> Option<IntMatrix> {
    (k > 0).then(|| tridiagonal(k, |i| if i == 0 || i + 1 == k { 1 } else { 2 }))
}

fn tridiagonal(m: usize, diag: impl Fn(usize) -> i64) -> IntMatrix {
    IntMatrix::from_fn(m, m, |i, j| {
        if i == j {
            BigInt::from(diag(i))
        } else if i.abs_diff(j) == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// One coefficient of `φ(t) = b_k(t) − λ·a_{k−1}(t)`: the coefficient of
/// `t^i` is `constant + lambda·λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearCoeff {
    #[serde(with = "crate::json::decimal")]
    pub constant: BigInt,
    #[serde(with = "crate::json::decimal")]
    pub lambda: BigInt,
}

/// Coefficients of `φ(t)`, constant term first, `k + 1` entries.
pub fn phi_coefficients(k: usize) -> Result<Vec<LinearCoeff>> {
    let polys = path_char_polys(k)?;
    Ok((0..=k)
        .map(|i| LinearCoeff {
            constant: polys.b.coeff(i),
            lambda: -polys.a.coeff(i),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn small_products() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(are_isomorphic(
            &rooted_product_path(&k1, 2).unwrap(),
            &Graph::path(2).unwrap()
        )
        .unwrap());
        assert!(are_isomorphic(
            &rooted_product_path(&k2, 2).unwrap(),
            &Graph::path(4).unwrap()
        )
        .unwrap());
        assert_eq!(
            rooted_product_path(&k1, 3).unwrap(),
            Graph::path(3).unwrap()
        );
        assert!(rooted_product_path(&k1, 1).is_err());
    }

    #[test]
    fn level_major_layout() {
        let g = Graph::cycle(4).unwrap();
        let h = rooted_product_path(&g, 3).unwrap();
        assert_eq!(h.order(), 12);
        assert_eq!(h.edge_count(), 4 + 4 * 2);
        for (i, j) in g.edges() {
            assert!(h.has_edge(i, j));
        }
        for i in 0..4 {
            assert!(h.has_edge(i, 4 + i) && h.has_edge(4 + i, 8 + i));
            assert_eq!(h.degree(i), g.degree(i) + 1);
            assert_eq!(h.degree(4 + i), 2);
            assert_eq!(h.degree(8 + i), 1);
        }
    }

    #[test]
    fn towers() {
        let g = Graph::path(3).unwrap();
        assert_eq!(rooted_tower(&g, 2, 0).unwrap(), g);
        let k1 = Graph::complete(1).unwrap();
        let t = rooted_tower(&k1, 2, 2).unwrap();
        assert_eq!((t.order(), t.edge_count()), (4, 3));
        assert!(are_isomorphic(&t, &Graph::path(4).unwrap()).unwrap());
        assert_eq!(rooted_tower(&k1, 3, 1).unwrap(), Graph::path(3).unwrap());
        assert_eq!(rooted_tower(&g, 3, 2).unwrap().order(), 27);
        assert!(matches!(
            rooted_tower(&g, 2, 12),
            Err(Error::TowerTooLarge { .. })
        ));
        assert!(matches!(
            rooted_tower(&g, 2, 200),
            Err(Error::TowerTooLarge { .. })
        ));
    }

    #[test]
    fn path_polynomials() {
        let p = path_char_polys(2).unwrap();
        assert_eq!(
            (p.a, p.b, p.f),
            (poly(&[-1, 1]), poly(&[0, -2, 1]), poly(&[0, 1]))
        );
        let p = path_char_polys(3).unwrap();
        assert_eq!(p.a, poly(&[1, -3, 1]));
        assert_eq!(p.b, poly(&[0, 3, -4, 1]));
        assert_eq!(p.f, poly(&[1, -2, 1]));
        let p = path_char_polys(1).unwrap();
        assert_eq!((p.a, p.b, p.f), (poly(&[1]), poly(&[-1, 1]), poly(&[1])));
        assert!(path_char_polys(0).is_err());
    }

    #[test]
    fn polynomials_match_explicit_matrices() {
        for k in 1..=12 {
            let p = path_char_polys(k).unwrap();
            assert_eq!(p.a.degree(), Some(k - 1));
            assert_eq!(p.b.degree(), Some(k));
            assert_eq!(p.f.degree(), Some(k - 1));
            assert!(p.a.is_monic() && p.b.is_monic() && p.f.is_monic());
            assert_eq!(path_matrix_b(k).unwrap().char_poly().unwrap(), p.b, "b_{k}");
            if let Some(a) = path_matrix_a(k) {
                assert_eq!(a.char_poly().unwrap(), p.a, "a_{}", k - 1);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let c = |v: &[LinearCoeff]| -> Vec<(i64, i64)> {
            v.iter()
                .map(|x| {
                    (
                        i64::try_from(&x.constant).unwrap(),
                        i64::try_from(&x.lambda).unwrap(),
                    )
                })
                .collect()
        };
        // t³ − (4+λ)t² + (3+3λ)t − λ
        assert_eq!(
            c(&phi_coefficients(3).unwrap()),
            vec![(0, -1), (3, 3), (-4, -1), (1, 0)]
        );
        // t² − (2+λ)t + λ
        assert_eq!(
            c(&phi_coefficients(2).unwrap()),
            vec![(0, 1), (-2, -1), (1, 0)]
        );
    }

    #[test]
    fn phi_vanishes_at_its_generating_point() {
        // λ = b_k(s)/a_{k−1}(s) ⇒ a·φ(s) = a·b − b·a = 0; checked without division.
        for k in 1..=7 {
            let polys = path_char_polys(k).unwrap();
            let coeffs = phi_coefficients(k).unwrap();
            for s in -5i64..=5 {
                let s = BigInt::from(s);
                let a_s = polys.a.eval(&s);
                if a_s.is_zero() {
                    continue;
                }
                let b_s = polys.b.eval(&s);
                let mut acc = BigInt::zero();
                let mut pow = BigInt::one();
                for c in &coeffs {
                    acc += &pow * (&c.constant * &a_s + &c.lambda * &b_s);
                    pow *= &s;
                }
                assert!(acc.is_zero(), "k={k} s={s}");
            }
        }
    }
}
