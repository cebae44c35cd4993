//! Exact integer linear algebra, polynomials, factorization and arithmetic
//! modulo a prime.

mod factor;
mod matrix;
mod modp;
mod poly;

pub use factor::{
    factor_integer, is_odd_square_free, is_prime, is_probable_prime, two_adic_valuation,
    FactorBudget, Factorization, PrimePower, SquareFree,
};
pub use matrix::IntMatrix;
pub use modp::{nullspace_mod_p, poly_gcd_mod_p, ModPrime};
pub use poly::{resultant, IntPolynomial};
