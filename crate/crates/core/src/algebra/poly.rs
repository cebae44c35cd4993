use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Univariate polynomial over the integers, constant term first.
///
/// Always normalized: no trailing zero coefficients, and the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Sylvester matrix of `self` (degree m) and `other` (degree n): n shifted
    /// rows of `self` followed by m shifted rows of `other`, coefficients in
    /// descending order.
    pub fn sylvester(&self, other: &Self) -> Result<IntMatrix> {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Err(Error::ZeroPolynomial);
        };
        let size = m + n;
        let mut s = IntMatrix::zeros(size, size);
        for r in 0..n {
            for (d, c) in self.coeffs.iter().rev().enumerate() {
                s.set(r, r + d, c.clone());
            }
        }
        for r in 0..m {
            for (d, c) in other.coeffs.iter().rev().enumerate() {
                s.set(n + r, r + d, c.clone());
            }
        }
        Ok(s)
    }
}

/// `Res(f, g)` as the determinant of the Sylvester matrix, which equals
/// `lc(f)^deg g · lc(g)^deg f · ∏(αᵢ − βⱼ)` over the roots of `f` and `g`.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    match (m, n) {
        (0, 0) => Ok(BigInt::one()),
        (0, _) => Ok(num_traits::pow(f.coeffs[0].clone(), n)),
        (_, 0) => Ok(num_traits::pow(g.coeffs[0].clone(), m)),
        _ => f.sylvester(g)?.det(),
    }
}

impl fmt::Display for IntPolynomial {
    /// `c0 + c1*x + c2*x^2 …`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => c.abs().to_string(),
                1 => format!("{}*x", c.abs()),
                _ => format!("{}*x^{i}", c.abs()),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// JSON form: array of decimal strings, constant term first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 3, -4, 1]).to_string(), "3*x - 4*x^2 + 1*x^3");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "-1 + 1*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_is_decimal_strings() {
        let json = serde_json::to_string(&p(&[-4, 9, -6, 1])).unwrap();
        assert_eq!(json, r#"["-4","9","-6","1"]"#);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            resultant(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            resultant(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(9)
        );
        assert!(matches!(
            resultant(&IntPolynomial::zero(), &p(&[1])),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn resultant_equals_root_product() {
        // f = 2(x−1)(x−3), g = (x+2)(x−5): Res = 2² · ∏(αᵢ − βⱼ).
        let f = p(&[6, -8, 2]);
        let g = p(&[-10, -3, 1]);
        let roots_f = [1i64, 3];
        let roots_g = [-2i64, 5];
        let mut prod = BigInt::from(4);
        for a in roots_f {
            for b in roots_g {
                prod *= a - b;
            }
        }
        assert_eq!(resultant(&f, &g).unwrap(), prod);
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-6i64..=6, 1..=5)
            .prop_map(|c| p(&c))
            .prop_filter("nonzero", |q| !q.is_zero())
    }

    proptest! {
        #[test]
        fn resultant_antisymmetry(f in arb_poly(), g in arb_poly()) {
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            let sign = if (df * dg) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(sign) * resultant(&g, &f).unwrap());
        }

        #[test]
        fn product_evaluates_pointwise(f in arb_poly(), g in arb_poly(), x in -20i64..20) {
            let x = BigInt::from(x);
            prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
            prop_assert_eq!((&f - &g).eval(&x), f.eval(&x) - g.eval(&x));
        }
    }
}
