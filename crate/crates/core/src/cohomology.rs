//! The truncated ring `H*(CP^d; Q) = Q[u]/(u^{d+1})`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::{factorial, is_integral};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("class has zero constant term and is not a unit")]
    NonUnit,
}

/// A class `sum_{i=0}^{d} coeffs[i] u^i` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohClass {
    coeffs: Vec<BigRational>,
}

impl CohClass {
    /// `coeffs[i]` is the coefficient of `u^i`; the truncation dimension is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a class needs at least the u^0 slot");
        Self { coeffs }
    }

    /// Pads or truncates `coeffs` to dimension `d`.
    pub fn from_ints(d: usize, coeffs: &[i64]) -> Self {
        let mut v: Vec<BigRational> = coeffs
            .iter()
            .take(d + 1)
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        v.resize(d + 1, BigRational::zero());
        Self::new(v)
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![BigRational::zero(); d + 1])
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(d, 0, BigRational::one())
    }

    /// The generator `u`.
    pub fn generator(d: usize) -> Self {
        Self::monomial(d, 1, BigRational::one())
    }

    pub fn monomial(d: usize, power: usize, coeff: BigRational) -> Self {
        let mut c = Self::zero(d);
        if power <= d {
            c.coeffs[power] = coeff;
        }
        c
    }

    /// `exp(t u) = sum_i t^i u^i / i!`.
    pub fn exp_series(t: &BigInt, d: usize) -> Self {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut power = BigInt::one();
        for i in 0..=d {
            coeffs.push(BigRational::new(power.clone(), factorial(i as u32)));
            power *= t;
        }
        Self::new(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integral)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    fn check_dim(&self, other: &CohClass) -> Result<(), CohomologyError> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(CohomologyError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &CohClass) -> Result<CohClass, CohomologyError> {
        self.check_dim(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Product truncated above `u^d`.
    pub fn checked_mul(&self, other: &CohClass) -> Result<CohClass, CohomologyError> {
        self.check_dim(other)?;
        let d = self.dim();
        let mut out = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, k: &BigRational) -> CohClass {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn invert_unit(&self) -> Result<CohClass, CohomologyError> {
        if !self.is_unit() {
            return Err(CohomologyError::NonUnit);
        }
        let d = self.dim();
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![BigRational::zero(); d + 1];
        out[0] = inv0.clone();
        for k in 1..=d {
            let s = (1..=k).fold(BigRational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[k - i]
            });
            out[k] = -s * &inv0;
        }
        Ok(Self::new(out))
    }

    /// `x^k` by repeated squaring; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> Result<CohClass, CohomologyError> {
        let base = if k < 0 { self.invert_unit()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.dim());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `(1 + y)^k` for a class with constant term 1, via the binomial series.
    /// Handles arbitrarily large `k` in `O(d^2)`.
    pub fn pow_big(&self, k: &BigInt) -> Result<CohClass, CohomologyError> {
        if !self.coeffs[0].is_one() {
            let small = i64::try_from(k).expect("exponent fits in i64 for non-monic classes");
            return self.pow(small);
        }
        let d = self.dim();
        let mut y = self.clone();
        y.coeffs[0] = BigRational::zero();
        let mut acc = Self::one(d);
        let mut y_pow = Self::one(d);
        for j in 1..=d as u32 {
            y_pow = &y_pow * &y;
            if y_pow.is_zero() {
                break;
            }
            let b = BigRational::from_integer(crate::exactmath::binomial(k, j));
            acc = &acc + &y_pow.scale(&b);
        }
        Ok(acc)
    }
}

impl Add for &CohClass {
    type Output = CohClass;

    fn add(self, rhs: &CohClass) -> CohClass {
        self.checked_add(rhs).expect("cohomology dimensions must agree")
    }
}

impl Sub for &CohClass {
    type Output = CohClass;

    fn sub(self, rhs: &CohClass) -> CohClass {
        self + &(-rhs)
    }
}

impl Mul for &CohClass {
    type Output = CohClass;

    fn mul(self, rhs: &CohClass) -> CohClass {
        self.checked_mul(rhs).expect("cohomology dimensions must agree")
    }
}

impl Neg for &CohClass {
    type Output = CohClass;

    fn neg(self) -> CohClass {
        CohClass::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{abs}u")?,
                (_, true) => write!(f, "u^{i}")?,
                (_, false) => write!(f, "{abs}u^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
