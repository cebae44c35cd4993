use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from equal-length rows.
    ///
    /// Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Self {
        let rows = columns.first().map_or(0, |c| c.len());
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the update `a_ij ← (a_ij·a_kk − a_ik·a_kj) / a_prev`
    /// is exact, so intermediate entries stay minors of the input.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                negate = !negate;
            }
            let (head, tail) = a.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                let factor = row[k].clone();
                for j in k + 1..n {
                    let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                    row[j] = if prev.is_one() { v } else { v / &prev };
                }
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// `det(xI − M)`, obtained from the determinants at `x = 0, 1, …, n` by
    /// exact Newton interpolation.
    ///
    /// The forward differences of an integer polynomial at consecutive
    /// integers satisfy `k! | Δᵏp(0)`, so every division below is exact.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let n = self.require_square()?;
        let mut values = Vec::with_capacity(n + 1);
        for t in 0..=n {
            let t = BigInt::from(t);
            let shifted = Self::from_fn(n, n, |i, j| {
                let v = -&self[(i, j)];
                if i == j {
                    v + &t
                } else {
                    v
                }
            });
            values.push(shifted.det()?);
        }
        // values[k] becomes Δᵏp(0) / k!.
        let mut factorial = BigInt::one();
        let mut newton = Vec::with_capacity(n + 1);
        let mut diffs = values;
        for k in 0..=n {
            if k > 0 {
                factorial *= k;
                for i in 0..diffs.len() - 1 {
                    diffs[i] = &diffs[i + 1] - &diffs[i];
                }
                diffs.pop();
            }
            let (q, r) = num_integer::Integer::div_rem(&diffs[0], &factorial);
            debug_assert!(r.is_zero(), "non-integral Newton coefficient");
            newton.push(q);
        }
        // p(x) = Σ c_k · x(x−1)…(x−k+1), evaluated Horner-style.
        let mut p = IntPolynomial::constant(newton[n].clone());
        for k in (0..n).rev() {
            let linear = IntPolynomial::new(vec![BigInt::from(-(k as i64)), BigInt::one()]);
            p = &(&p * &linear) + &IntPolynomial::constant(newton[k].clone());
        }
        debug_assert!(p.is_monic() && p.degree() == Some(n));
        Ok(p)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_default()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 1 {
            return BigInt::from(m[0][0]);
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            if m[0][c] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn to_matrix(m: &[Vec<i64>]) -> IntMatrix {
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        IntMatrix::from_i64(&rows)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(IntMatrix::identity(5).det().unwrap(), BigInt::from(1));
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 1], &[1, 2]]).det().unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn det_dimension_errors() {
        let m = IntMatrix::zeros(2, 3);
        assert!(matches!(
            m.det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            IntMatrix::zeros(0, 0).det(),
            Err(Error::EmptyMatrix)
        ));
        assert!(m.char_poly().is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for sample in 0..240 {
            let n = 1 + sample % 8;
            // Sparse-ish matrices hit the row-swap path regularly.
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_bool(0.3) {
                                0
                            } else {
                                rng.gen_range(-9..=9)
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(
                to_matrix(&m).det().unwrap(),
                cofactor_det(&m),
                "matrix {m:?}"
            );
        }
    }

    #[test]
    fn char_poly_examples() {
        let k2 = IntMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            k2.char_poly().unwrap(),
            IntPolynomial::from_i64(&[0, -2, 1])
        );
        let p3 = IntMatrix::from_i64(&[&[1, 1, 0], &[1, 2, 1], &[0, 1, 1]]);
        assert_eq!(
            p3.char_poly().unwrap(),
            IntPolynomial::from_i64(&[0, 3, -4, 1])
        );
        let k3 = IntMatrix::from_i64(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        assert_eq!(
            k3.char_poly().unwrap(),
            IntPolynomial::from_i64(&[-4, 9, -6, 1])
        );
    }

    #[test]
    fn char_poly_constant_term_and_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=7 {
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            let mat = to_matrix(&m);
            let p = mat.char_poly().unwrap();
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(n));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.coeff(0), BigInt::from(sign) * cofactor_det(&m));
            let trace: i64 = (0..n).map(|i| m[i][i]).sum();
            assert_eq!(p.coeff(n - 1), BigInt::from(-trace));
        }
    }
}
