//! Exact arithmetic: rationals, dense rational matrices, integer divisors,
//! and multivariate integer polynomials over the fixed variables `a, c, m, n, q`.

mod divisors;
mod frac;
mod matrix;
mod mpoly;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use divisors::{divisors_signed, elem_sym};
pub use frac::MPolyFrac;
pub use matrix::{solve_exact, vandermonde, vandermonde_inverse, RatMatrix};
pub use mpoly::{MPolyZ, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("vandermonde nodes are not pairwise distinct")]
    DuplicateNodes,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("divisors of zero are not enumerable")]
    ZeroArgument,
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("variable {0} has no assigned value")]
    Unassigned(char),
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Generalized binomial coefficient `k (k-1) ... (k-j+1) / j!`, defined for
/// every integer `k` and `j >= 0`.
pub fn binomial(k: &BigInt, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= k - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Least non-negative residue of `x` modulo `p`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    u64::try_from(r).expect("residue fits in u64")
}

pub(crate) fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.abs()))
}

pub(crate) fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}
