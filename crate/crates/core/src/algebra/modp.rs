//! Linear algebra and polynomial gcds over F_p for arbitrary-precision p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{is_prime, IntMatrix, IntPolynomial};
use crate::error::{Error, Result};

/// A verified prime modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPrime(BigInt);

impl ModPrime {
    pub fn new(p: &BigInt) -> Result<Self> {
        if is_prime(p) {
            Ok(ModPrime(p.clone()))
        } else {
            Err(Error::NotPrime(p.clone()))
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.0
    }

    /// Canonical residue in `[0, p)`.
    pub fn reduce(&self, v: &BigInt) -> BigInt {
        v.mod_floor(&self.0)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b).mod_floor(&self.0)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a - b).mod_floor(&self.0)
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: &BigInt) -> BigInt {
        let g = a.extended_gcd(&self.0);
        debug_assert!(g.gcd.is_one(), "inverting a multiple of p");
        g.x.mod_floor(&self.0)
    }

    pub fn reduce_poly(&self, f: &IntPolynomial) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = f.coeffs().iter().map(|v| self.reduce(v)).collect();
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        c
    }

    fn poly_rem(&self, a: &mut Vec<BigInt>, b: &[BigInt]) {
        let lead_inv = self.inv(b.last().expect("nonzero divisor"));
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = self.mul(a.last().unwrap(), &lead_inv);
            for (i, bc) in b.iter().enumerate() {
                a[shift + i] = self.sub(&a[shift + i], &self.mul(&q, bc));
            }
            while a.last().is_some_and(|v| v.is_zero()) {
                a.pop();
            }
        }
    }
}

/// Basis of `{v : m·v ≡ 0 (mod p)}`, each vector scaled so its first nonzero
/// entry is 1. Entries are residues in `[0, p)`.
pub fn nullspace_mod_p(m: &IntMatrix, p: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let f = ModPrime::new(p)?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| m.row(i).iter().map(|v| f.reduce(v)).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = f.inv(&a[r][c]);
        for v in a[r].iter_mut() {
            *v = f.mul(v, &inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }

    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigInt::zero(); cols];
        v[free] = BigInt::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.reduce(&-&a[row][free]);
        }
        let lead = v
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("v[free] = 1");
        let inv = f.inv(&lead);
        basis.push(v.iter().map(|x| f.mul(x, &inv)).collect());
    }
    Ok(basis)
}

/// Monic gcd of `f mod p` and `g mod p`, coefficients as residues in `[0, p)`.
pub fn poly_gcd_mod_p(f: &IntPolynomial, g: &IntPolynomial, p: &BigInt) -> Result<IntPolynomial> {
    let field = ModPrime::new(p)?;
    let mut a = field.reduce_poly(f);
    let mut b = field.reduce_poly(g);
    if a.is_empty() && b.is_empty() {
        return Err(Error::BothZeroModP(p.clone()));
    }
    while !b.is_empty() {
        field.poly_rem(&mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    let inv = field.inv(a.last().expect("nonzero gcd"));
    Ok(IntPolynomial::new(
        a.iter().map(|c| field.mul(c, &inv)).collect(),
    ))
}
