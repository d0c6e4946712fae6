use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::kclass::write_series;
use super::{check_ko_dim, real_reduce, KClass, KTheoryError};
use crate::cohomology::CohClass;

/// An element of `KO(CP^d)` for `d` in `{4, 5, 6}`, written in powers of
/// `w = r(L)`. For `d = 5` the `w^3` coefficient is a residue mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KOClass {
    dim: usize,
    coeffs: Vec<BigInt>,
}

/// Number of stored coefficients (`w^0 ..= w^s`).
pub(crate) fn ko_len(d: usize) -> usize {
    if d == 4 {
        3
    } else {
        4
    }
}

impl KOClass {
    pub fn new(d: usize, coeffs: Vec<BigInt>) -> Result<Self, KTheoryError> {
        check_ko_dim(d)?;
        let expected = ko_len(d);
        if coeffs.len() != expected {
            return Err(KTheoryError::BadLength {
                expected,
                actual: coeffs.len(),
            });
        }
        let mut x = Self { dim: d, coeffs };
        x.normalize();
        Ok(x)
    }

    pub fn from_ints(d: usize, coeffs: &[i64]) -> Result<Self, KTheoryError> {
        Self::new(d, coeffs.iter().map(|&c| c.into()).collect())
    }

    fn normalize(&mut self) {
        if self.dim == 5 {
            self.coeffs[3] = self.coeffs[3].mod_floor(&BigInt::from(2));
        }
    }

    /// Builds from an untruncated coefficient list, dropping powers of `w`
    /// that vanish in the ring.
    pub(crate) fn from_series(d: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(ko_len(d), BigInt::zero());
        let mut x = Self { dim: d, coeffs };
        x.normalize();
        x
    }

    pub fn zero(d: usize) -> Result<Self, KTheoryError> {
        check_ko_dim(d)?;
        Ok(Self::from_series(d, vec![]))
    }

    pub fn constant(d: usize, k: BigInt) -> Result<Self, KTheoryError> {
        check_ko_dim(d)?;
        Ok(Self::from_series(d, vec![k]))
    }

    pub fn one(d: usize) -> Result<Self, KTheoryError> {
        Self::constant(d, BigInt::one())
    }

    pub fn omega(d: usize) -> Result<Self, KTheoryError> {
        Self::omega_pow(d, 1)
    }

    /// `w^j`; zero once `j` exceeds the top stored power.
    pub fn omega_pow(d: usize, j: usize) -> Result<Self, KTheoryError> {
        check_ko_dim(d)?;
        let mut v = vec![BigInt::zero(); ko_len(d)];
        if j < v.len() {
            v[j] = BigInt::one();
        }
        Ok(Self::from_series(d, v))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_dim(&self, other: &KOClass) -> Result<(), KTheoryError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(KTheoryError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn checked_add(&self, other: &KOClass) -> Result<KOClass, KTheoryError> {
        self.check_dim(other)?;
        Ok(Self::from_series(
            self.dim,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn ko_mul(&self, other: &KOClass) -> Result<KOClass, KTheoryError> {
        self.check_dim(other)?;
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Ok(Self::from_series(self.dim, out))
    }

    pub fn scale(&self, k: &BigInt) -> KOClass {
        Self::from_series(self.dim, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> KOClass {
        let one = Self::from_series(self.dim, vec![BigInt::one()]);
        (0..e).fold(one, |acc, _| &acc * self)
    }

    /// The ring endomorphism `w -> image`, applied to `self`.
    fn substitute_omega(&self, image: &KOClass) -> KOClass {
        let mut acc = Self::from_series(self.dim, vec![]);
        let mut power = Self::from_series(self.dim, vec![BigInt::one()]);
        for c in &self.coeffs {
            acc = &acc + &power.scale(c);
            power = &power * image;
        }
        acc
    }

    /// Complexification `c`, the ring map with `c(w) = L + t(L)`.
    pub fn complexify(&self) -> KClass {
        let c_omega = &KClass::l(self.dim).conjugate() + &KClass::l(self.dim);
        let mut acc = KClass::zero(self.dim);
        let mut power = KClass::one(self.dim);
        for c in &self.coeffs {
            acc = &acc + &power.scale(c);
            power = &power * &c_omega;
        }
        acc
    }

    /// `psi^2(w) = r(L^2 + 2L)`.
    pub fn adams2_omega(d: usize) -> Result<KOClass, KTheoryError> {
        real_reduce(&KClass::l(d).adams(2))
    }

    /// Adams operation `psi^k` for `k` a power of two.
    pub fn adams(&self, k: u32) -> Result<KOClass, KTheoryError> {
        if k == 0 || !k.is_power_of_two() {
            return Err(KTheoryError::UnsupportedOperation(format!(
                "psi^{k} on KO is only modelled for powers of two"
            )));
        }
        let image = Self::adams2_omega(self.dim)?;
        let mut x = self.clone();
        for _ in 0..k.trailing_zeros() {
            x = x.substitute_omega(&image);
        }
        Ok(x)
    }

    /// Total Pontrjagin class, `p_i = (-1)^i c_{2i}` of the complexification.
    pub fn pontrjagin_total(&self) -> Result<CohClass, KTheoryError> {
        if self.dim == 5 {
            return Err(KTheoryError::UnsupportedDimension(5));
        }
        let chern = self.complexify().total_chern();
        let coeffs = (0..=self.dim)
            .map(|i| match i % 4 {
                0 => chern.coeff(i).clone(),
                2 => -chern.coeff(i),
                _ => BigRational::zero(),
            })
            .collect();
        Ok(CohClass::new(coeffs))
    }
}

impl Add for &KOClass {
    type Output = KOClass;

    fn add(self, rhs: &KOClass) -> KOClass {
        self.checked_add(rhs).expect("KO dimensions must agree")
    }
}

impl Sub for &KOClass {
    type Output = KOClass;

    fn sub(self, rhs: &KOClass) -> KOClass {
        self + &(-rhs)
    }
}

impl Mul for &KOClass {
    type Output = KOClass;

    fn mul(self, rhs: &KOClass) -> KOClass {
        self.ko_mul(rhs).expect("KO dimensions must agree")
    }
}

impl Neg for &KOClass {
    type Output = KOClass;

    fn neg(self) -> KOClass {
        KOClass::from_series(self.dim, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for KOClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, &self.coeffs, "w")
    }
}
