use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::KTheoryError;
use crate::cohomology::CohClass;
use crate::exactmath::binomial;

/// An element `sum_i coeffs[i] L^i` of `K(CP^d)`, `L = H - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KClass {
    coeffs: Vec<BigInt>,
}

impl KClass {
    /// `coeffs[i]` is the coefficient of `L^i`; the dimension is `len - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a K-class needs at least the rank slot");
        Self { coeffs }
    }

    /// Pads or truncates `coeffs` to dimension `d`.
    pub fn from_ints(d: usize, coeffs: &[i64]) -> Self {
        let mut v: Vec<BigInt> = coeffs.iter().take(d + 1).map(|&c| c.into()).collect();
        v.resize(d + 1, BigInt::zero());
        Self::new(v)
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![BigInt::zero(); d + 1])
    }

    pub fn one(d: usize) -> Self {
        Self::constant(d, BigInt::one())
    }

    pub fn constant(d: usize, k: BigInt) -> Self {
        let mut c = Self::zero(d);
        c.coeffs[0] = k;
        c
    }

    /// `L = H - 1`.
    pub fn l(d: usize) -> Self {
        Self::l_pow(d, 1)
    }

    pub fn l_pow(d: usize, i: usize) -> Self {
        let mut c = Self::zero(d);
        if i <= d {
            c.coeffs[i] = BigInt::one();
        }
        c
    }

    /// The line bundle `H^j = (1 + L)^j`, for any integer `j`.
    pub fn h_pow(d: usize, j: i64) -> Self {
        let j = BigInt::from(j);
        Self::new((0..=d as u32).map(|i| binomial(&j, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rank(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, other: &KClass) -> Result<(), KTheoryError> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(KTheoryError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &KClass) -> Result<KClass, KTheoryError> {
        self.check_dim(other)?;
        Ok(Self::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Product in `Z[L]/(L^{d+1})`.
    pub fn checked_mul(&self, other: &KClass) -> Result<KClass, KTheoryError> {
        self.check_dim(other)?;
        let d = self.dim();
        let mut out = vec![BigInt::zero(); d + 1];
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

    pub fn scale(&self, k: &BigInt) -> KClass {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> KClass {
        (0..e).fold(Self::one(self.dim()), |acc, _| &acc * self)
    }

    /// The ring endomorphism determined by `L -> image`, applied to `self`.
    /// `image` must have zero rank so the substitution is well defined.
    pub fn substitute_l(&self, image: &KClass) -> KClass {
        debug_assert!(image.rank().is_zero());
        let d = self.dim();
        let mut acc = Self::zero(d);
        let mut power = Self::one(d);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = &acc + &power.scale(c);
            }
            power = &power * image;
        }
        acc
    }

    /// Complex conjugation `t`, with `t(L) = H^{-1} - 1 = -L + L^2 - ...`.
    pub fn conjugate(&self) -> KClass {
        let d = self.dim();
        let t_l = &Self::h_pow(d, -1) - &Self::one(d);
        self.substitute_l(&t_l)
    }

    /// Adams operation `psi^k`, with `psi^k(L) = (1 + L)^k - 1`.
    pub fn adams(&self, k: u32) -> KClass {
        let d = self.dim();
        let image = &Self::h_pow(d, k as i64) - &Self::one(d);
        self.substitute_l(&image)
    }

    /// Chern character `ch(L) = e^u - 1`, extended multiplicatively.
    pub fn chern_character(&self) -> CohClass {
        let d = self.dim();
        let exp_minus_one = &CohClass::exp_series(&BigInt::one(), d) - &CohClass::one(d);
        let mut acc = CohClass::zero(d);
        let mut power = CohClass::one(d);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = &acc + &power.scale(&BigRational::from_integer(c.clone()));
            }
            power = &power * &exp_minus_one;
        }
        acc
    }

    /// Coefficients `b_j` with `self = sum_j b_j H^j`, using
    /// `L^i = sum_j (-1)^(i-j) C(i, j) H^j`.
    pub fn h_basis(&self) -> Vec<BigInt> {
        let d = self.dim();
        let mut b = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in b.iter_mut().enumerate().take(i + 1) {
                let term = c * binomial(&BigInt::from(i), j as u32);
                if (i - j) % 2 == 1 {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
        b
    }

    /// Total Chern class `prod_j (1 + j u)^{b_j}` of `sum_j b_j H^j`.
    pub fn total_chern(&self) -> CohClass {
        let d = self.dim();
        let mut acc = CohClass::one(d);
        for (j, b) in self.h_basis().iter().enumerate().skip(1) {
            if b.is_zero() {
                continue;
            }
            let jj = BigInt::from(j);
            let factor = CohClass::new(
                (0..=d as u32)
                    .map(|i| BigRational::from_integer(binomial(b, i) * num_traits::pow(jj.clone(), i as usize)))
                    .collect(),
            );
            acc = &acc * &factor;
        }
        acc
    }
}

impl Add for &KClass {
    type Output = KClass;

    fn add(self, rhs: &KClass) -> KClass {
        self.checked_add(rhs).expect("K-theory dimensions must agree")
    }
}

impl Sub for &KClass {
    type Output = KClass;

    fn sub(self, rhs: &KClass) -> KClass {
        self + &(-rhs)
    }
}

impl Mul for &KClass {
    type Output = KClass;

    fn mul(self, rhs: &KClass) -> KClass {
        self.checked_mul(rhs).expect("K-theory dimensions must agree")
    }
}

impl Neg for &KClass {
    type Output = KClass;

    fn neg(self) -> KClass {
        KClass::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, &self.coeffs, "L")
    }
}

pub(crate) fn write_series(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], sym: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        }
        first = false;
        let abs = c.abs();
        match (i, abs.is_one()) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "{sym}")?,
            (1, false) => write!(f, "{abs}{sym}")?,
            (_, true) => write!(f, "{sym}^{i}")?,
            (_, false) => write!(f, "{abs}{sym}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
