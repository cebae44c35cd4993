//! Integer factorization: trial division up to 10⁶, Pollard–Brent rho with
//! deterministic restarts, and Miller–Rabin primality.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;

const TRIAL_LIMIT: u32 = 1_000_000;

/// Bases 2..=41 make Miller–Rabin deterministic below this bound.
const DETERMINISTIC_BOUND: &str = "3317044064679887385961981";
const DETERMINISTIC_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const EXTRA_BASES: [u32; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Effort bound for Pollard rho, counted in iterations per composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            rho_iterations: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    #[serde(with = "json::decimal")]
    pub prime: BigInt,
    pub exponent: u32,
}

/// `sign · ∏ prime^exponent · cofactor` reproduces the input; `cofactor` is
/// the composite part left over when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<PrimePower>,
    pub complete: bool,
    #[serde(with = "json::decimal_opt")]
    pub cofactor: Option<BigInt>,
}

impl Factorization {
    pub fn product(&self) -> BigInt {
        let mut out = BigInt::from(self.sign);
        for f in &self.factors {
            out *= num_traits::pow(f.prime.clone(), f.exponent as usize);
        }
        if let Some(c) = &self.cofactor {
            out *= c;
        }
        out
    }

    /// Odd primes, ascending.
    pub fn odd_primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|f| &f.prime).filter(|p| p.is_odd())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareFree {
    Yes,
    No,
    Unknown,
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                for j in (i * i..=limit).step_by(i) {
                    sieve[j] = false;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| i as u32)
            .collect()
    })
}

/// Largest `v` with `2^v | z`.
pub fn two_adic_valuation(z: &BigInt) -> Result<u64> {
    z.trailing_zeros()
        .ok_or(Error::ZeroArgument("2-adic valuation"))
}

fn miller_rabin_round(n: &BigUint, d: &BigUint, s: u64, base: u32) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let a = BigUint::from(base) % n;
    if a.is_zero() {
        return true;
    }
    let mut x = a.modpow(d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin: deterministic below 3.3·10²⁴, probabilistic (25 fixed
/// bases) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in DETERMINISTIC_BASES.iter().chain(&EXTRA_BASES) {
            if small == p as u64 {
                return true;
            }
            if small % p as u64 == 0 {
                return false;
            }
        }
    } else {
        for &p in DETERMINISTIC_BASES.iter().chain(&EXTRA_BASES) {
            if (n % p).is_zero() {
                return false;
            }
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 2");
    let d = &n_minus_1 >> s;
    let bound: BigUint = DETERMINISTIC_BOUND.parse().expect("constant");
    let extra: &[u32] = if *n < bound { &[] } else { &EXTRA_BASES };
    DETERMINISTIC_BASES
        .iter()
        .chain(extra)
        .all(|&b| miller_rabin_round(n, &d, s, b))
}

pub fn is_prime(n: &BigInt) -> bool {
    n.sign() == Sign::Plus && is_probable_prime(n.magnitude())
}

/// Pollard rho with Brent's cycle detection and batched gcds. Returns a
/// nontrivial factor, or `None` if `budget` iterations pass without one.
fn pollard_brent(n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut g = one.clone();
    let mut q = one.clone();
    let mut r = 1u64;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % n;
            }
            g = q.gcd(n);
            k += steps;
            if *budget <= steps {
                *budget = 0;
                if g == one {
                    return None;
                }
            } else {
                *budget -= steps;
            }
        }
        r *= 2;
    }
    if g == *n {
        // Batch overshot; replay one step at a time from the saved point.
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

/// Splits a composite with restarts `c = 1, 2, …` until the budget runs out.
fn find_factor(n: &BigUint, budget: u64) -> Option<BigUint> {
    let root = n.sqrt();
    if &root * &root == *n {
        return Some(root);
    }
    let mut remaining = budget;
    let mut c = 1;
    while remaining > 0 {
        if let Some(d) = pollard_brent(n, c, &mut remaining) {
            return Some(d);
        }
        c += 1;
    }
    None
}

pub fn factor_integer(z: &BigInt, budget: FactorBudget) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::ZeroArgument("factorization"));
    }
    let sign: i8 = if z.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = z.magnitude().clone();
    let mut primes: Vec<(BigUint, u32)> = Vec::new();

    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p_big, e));
        }
    }

    let mut cofactor = BigUint::one();
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            primes.push((m, 1));
            continue;
        }
        match find_factor(&m, budget.rho_iterations) {
            Some(d) => {
                let other = &m / &d;
                stack.push(d);
                stack.push(other);
            }
            None => cofactor *= m,
        }
    }

    primes.sort();
    let mut factors: Vec<PrimePower> = Vec::new();
    for (p, e) in primes {
        match factors.last_mut() {
            Some(last) if *last.prime.magnitude() == p => last.exponent += e,
            _ => factors.push(PrimePower {
                prime: BigInt::from(p),
                exponent: e,
            }),
        }
    }
    let complete = cofactor.is_one();
    Ok(Factorization {
        sign,
        factors,
        complete,
        cofactor: (!complete).then(|| BigInt::from(cofactor)),
    })
}

pub fn is_odd_square_free(z: &BigInt, budget: FactorBudget) -> Result<SquareFree> {
    if z.is_zero() {
        return Err(Error::ZeroArgument("square-free test"));
    }
    if z.is_even() {
        return Ok(SquareFree::No);
    }
    let f = factor_integer(z, budget)?;
    if f.factors.iter().any(|p| p.exponent > 1) {
        return Ok(SquareFree::No);
    }
    match &f.cofactor {
        None => Ok(SquareFree::Yes),
        Some(c) => {
            let r = c.magnitude().sqrt();
            if &r * &r == *c.magnitude() {
                return Ok(SquareFree::No);
            }
            // A repeated prime could straddle the found part and the cofactor.
            if f.factors.iter().any(|p| (c % &p.prime).is_zero()) {
                return Ok(SquareFree::No);
            }
            Ok(SquareFree::Unknown)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    fn powers(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors
            .iter()
            .map(|p| (p.prime.to_u64().unwrap(), p.exponent))
            .collect()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(two_adic_valuation(&BigInt::from(12)).unwrap(), 2);
        assert_eq!(two_adic_valuation(&BigInt::from(7)).unwrap(), 0);
        assert_eq!(
            two_adic_valuation(&-(BigInt::one() << 17usize)).unwrap(),
            17
        );
        assert!(two_adic_valuation(&BigInt::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        let b = FactorBudget::default();
        let f = factor_integer(&BigInt::from(672), b).unwrap();
        assert_eq!(powers(&f), vec![(2, 5), (3, 1), (7, 1)]);
        assert!(f.complete);
        let f = factor_integer(&BigInt::from(1), b).unwrap();
        assert!(f.factors.is_empty() && f.sign == 1 && f.complete);
        let f = factor_integer(&BigInt::from(10403), b).unwrap();
        assert_eq!(powers(&f), vec![(101, 1), (103, 1)]);
        let f = factor_integer(&BigInt::from(-90), b).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.product(), BigInt::from(-90));
        assert!(factor_integer(&BigInt::zero(), b).is_err());
    }

    #[test]
    fn rho_splits_large_semiprimes() {
        // Both factors are above the trial-division limit.
        let p = big("1000000007");
        let q = big("998244353");
        let r = big("2305843009213693951");
        let n = &p * &q * &r * &q;
        let f = factor_integer(&n, FactorBudget::default()).unwrap();
        assert!(f.complete);
        assert_eq!(f.product(), n);
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.factors[0].prime, q);
        assert_eq!(f.factors[0].exponent, 2);
        assert!(f.factors.iter().all(|pp| is_prime(&pp.prime)));
    }

    #[test]
    fn exhausted_budget_reports_cofactor() {
        let p = big("1000000007");
        let q = big("1000000009");
        let n = BigInt::from(3) * &p * &q;
        let f = factor_integer(&n, FactorBudget { rho_iterations: 1 }).unwrap();
        assert!(!f.complete);
        assert_eq!(f.cofactor, Some(&p * &q));
        assert_eq!(f.product(), n);
        assert_eq!(
            is_odd_square_free(&n, FactorBudget { rho_iterations: 1 }).unwrap(),
            SquareFree::Unknown
        );
        assert_eq!(
            is_odd_square_free(&n, FactorBudget::default()).unwrap(),
            SquareFree::Yes
        );
    }

    #[test]
    fn square_free_examples() {
        let b = FactorBudget::default();
        assert_eq!(
            is_odd_square_free(&BigInt::from(15), b).unwrap(),
            SquareFree::Yes
        );
        assert_eq!(
            is_odd_square_free(&BigInt::from(12), b).unwrap(),
            SquareFree::No
        );
        assert_eq!(
            is_odd_square_free(&BigInt::from(45), b).unwrap(),
            SquareFree::No
        );
        assert_eq!(
            is_odd_square_free(&BigInt::from(-105), b).unwrap(),
            SquareFree::Yes
        );
        assert_eq!(
            is_odd_square_free(&BigInt::from(1), b).unwrap(),
            SquareFree::Yes
        );
        // Square of a prime beyond trial division, caught by the perfect-square check.
        let p = big("1000000007");
        let sq = &p * &p;
        assert_eq!(
            is_odd_square_free(&sq, FactorBudget { rho_iterations: 1 }).unwrap(),
            SquareFree::No
        );
        assert!(is_odd_square_free(&BigInt::zero(), b).is_err());
    }

    #[test]
    fn primality() {
        let primes = [
            "2",
            "3",
            "1000000007",
            "2305843009213693951",
            "170141183460469231731687303715884105727",
        ];
        for p in primes {
            assert!(is_prime(&big(p)), "{p}");
        }
        // Carmichael numbers and a strong pseudoprime to many bases.
        let composites = ["1", "561", "41041", "3215031751", "3825123056546413051"];
        for c in composites {
            assert!(!is_prime(&big(c)), "{c}");
        }
        assert!(!is_prime(&BigInt::from(-7)));
    }

    fn trial_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    proptest! {
        #[test]
        fn factorization_reproduces_input(z in -10_000_000_000i64..10_000_000_000i64) {
            prop_assume!(z != 0);
            let f = factor_integer(&BigInt::from(z), FactorBudget::default()).unwrap();
            prop_assert!(f.complete);
            prop_assert_eq!(f.product(), BigInt::from(z));
            for w in f.factors.windows(2) {
                prop_assert!(w[0].prime < w[1].prime);
            }
            for pp in &f.factors {
                prop_assert!(trial_is_prime(pp.prime.to_u64().unwrap()));
            }
        }

        #[test]
        fn primality_matches_trial_division(n in 0u64..2_000_000) {
            prop_assert_eq!(is_probable_prime(&BigUint::from(n)), trial_is_prime(n));
        }
    }
}
