//! Chern vectors of stable complex bundles on `CP^d` and the lattice
//! `im(ch)` spanned by `q_m = exp(m u)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::cohomology::CohClass;
use crate::exactmath::{binomial, factorial, is_integral, solve_exact, MathError, RatMatrix};
use crate::ktheory::KClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("Q^-1 C is not integral: ({})", join(.solution))]
    NotRealizable { solution: Vec<BigRational> },
    #[error("empty Chern vector")]
    Empty,
    #[error(transparent)]
    Math(#[from] MathError),
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `(c_1, ..., c_d)`, `c_k` the coefficient of `u^k` in `c_k(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernVector {
    c: Vec<BigInt>,
}

impl ChernVector {
    pub fn new(c: Vec<BigInt>) -> Self {
        Self { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| x.into()).collect())
    }

    /// Chern vector of a K-class: coefficients `1..=d` of its total Chern class.
    pub fn of_class(x: &KClass) -> Self {
        let total = x.total_chern();
        Self::new(
            total.integer_coeffs().expect("Chern classes of K-classes are integral")[1..].to_vec(),
        )
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.c
    }

    /// `c_k`, 1-based.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.c[k - 1]
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.c))
    }
}

/// Multiplicities `a_k` of `q_k`, `k = 1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub a: Vec<BigInt>,
}

impl Decomposition {
    pub fn from_ints(a: &[i64]) -> Self {
        Self {
            a: a.iter().map(|&x| x.into()).collect(),
        }
    }

    /// The reduced class `sum_k a_k (H^k - 1)`.
    pub fn to_kclass(&self) -> KClass {
        let d = self.a.len();
        let one = KClass::one(d);
        self.a.iter().enumerate().fold(KClass::zero(d), |acc, (i, a)| {
            &acc + &(&KClass::h_pow(d, i as i64 + 1) - &one).scale(a)
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.a))
    }
}

pub fn q_vector(m: &BigInt, d: usize) -> CohClass {
    CohClass::exp_series(m, d)
}

fn pow_ratio(base: usize, e: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), e))
}

/// `W_{ij} = j^i` for `0 <= i, j <= d`, with `0^0 = 1`.
pub fn w_matrix(d: usize) -> RatMatrix {
    RatMatrix::from_fn(d + 1, d + 1, |i, j| pow_ratio(j, i))
}

/// `Q_{ij} = j^i` for `1 <= i, j <= d`.
pub fn q_matrix(d: usize) -> RatMatrix {
    RatMatrix::from_fn(d, d, |i, j| pow_ratio(j + 1, i + 1))
}

/// `b(m)`: the coefficients `m^i` of `i! q_m`.
pub fn moment_vector(m: &BigInt, d: usize) -> Vec<BigRational> {
    (0..=d)
        .map(|i| BigRational::from_integer(num_traits::pow(m.clone(), i)))
        .collect()
}

/// Solution of `W w = b(m)`, entry `k` (1-based, `n = d + 1`) being
/// `(-1)^(n-k) / (n-1)! * C(n-1, k-1) * prod_{j != k-1} (m - j)`.
pub fn closed_form_w(m: &BigInt, d: usize) -> Vec<BigRational> {
    let n = d + 1;
    let denom = factorial(d as u32);
    (1..=n)
        .map(|k| {
            let prod: BigInt = (0..=d)
                .filter(|&j| j != k - 1)
                .map(|j| m - BigInt::from(j))
                .product();
            let mut num = binomial(&BigInt::from(d), (k - 1) as u32) * prod;
            if (n - k) % 2 == 1 {
                num = -num;
            }
            BigRational::new(num, denom.clone())
        })
        .collect()
}

/// Newton's identities: power sums `s_1..s_d` of the roots from the
/// elementary symmetric functions `c_1..c_d`,
/// `s_i = sum_{j<i} (-1)^(j-1) c_j s_{i-j} + (-1)^(i-1) i c_i`.
pub fn newton_power_sums<T>(c: &[T]) -> Vec<T>
where
    T: Clone + From<i64> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let mut s: Vec<T> = Vec::with_capacity(c.len());
    for i in 1..=c.len() {
        let mut acc = T::from(i as i64) * c[i - 1].clone();
        if i % 2 == 0 {
            acc = T::from(0) - acc;
        }
        for j in 1..i {
            let term = c[j - 1].clone() * s[i - j - 1].clone();
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        s.push(acc);
    }
    s
}

/// `C(c_1, ..., c_d)`: row `i` is `i! ch_i`.
pub fn power_sums_from_chern(v: &ChernVector) -> Vec<BigInt> {
    newton_power_sums(v.entries())
}

/// Solves `Q a = C(v)` exactly; succeeds iff the solution is integral.
pub fn realizable(v: &ChernVector) -> Result<Decomposition, ChernError> {
    let d = v.dim();
    if d == 0 {
        return Err(ChernError::Empty);
    }
    let rhs: Vec<BigRational> = power_sums_from_chern(v)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let solution = solve_exact(&q_matrix(d), &rhs)?;
    if solution.iter().all(is_integral) {
        Ok(Decomposition {
            a: solution.into_iter().map(|x| x.to_integer()).collect(),
        })
    } else {
        Err(ChernError::NotRealizable { solution })
    }
}

/// Chern vector of `sum_k a_k (H^k - 1)`, i.e. `prod_k (1 + k u)^{a_k}`.
pub fn chern_from_multiplicities(a: &Decomposition) -> ChernVector {
    let d = a.a.len();
    let mut total = CohClass::one(d);
    for (i, ak) in a.a.iter().enumerate() {
        if ak.is_zero() {
            continue;
        }
        let k = BigInt::from(i + 1);
        let factor = CohClass::new(
            (0..=d as u32)
                .map(|j| BigRational::from_integer(binomial(ak, j) * num_traits::pow(k.clone(), j as usize)))
                .collect(),
        );
        total = &total * &factor;
    }
    let coeffs = total.integer_coeffs().expect("binomial series are integral");
    ChernVector::new(coeffs[1..].to_vec())
}

/// The binomial form of `closed_form_w`, valid for `m >= d + 1`:
/// `w_k = (-1)^(n-k) C(m, m-k+1) C(m-k, m-n)`.
pub fn binomial_form_w(m: &BigInt, d: usize) -> Option<Vec<BigInt>> {
    let n = BigInt::from(d + 1);
    if m < &n {
        return None;
    }
    let m_u: u32 = m.try_into().ok()?;
    Some(
        (1..=d + 1)
            .map(|k| {
                let kk = k as u32;
                let v = binomial(m, m_u - kk + 1) * binomial(&(m - BigInt::from(k)), m_u - (d as u32 + 1));
                if (d + 1 - k) % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect(),
    )
}
