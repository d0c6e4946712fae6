use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{MPolyZ, MathError, Monomial, Var};

/// A polynomial divided by `k * mono` with `k > 0` an integer and `mono` a
/// monomial. Always kept in lowest terms: the integer content of the
/// numerator is coprime to `k` and no variable divides both parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPolyFrac {
    numer: MPolyZ,
    denom: BigInt,
    denom_mono: Monomial,
}

impl MPolyFrac {
    pub fn new(numer: MPolyZ, denom: BigInt, denom_mono: Monomial) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let mut f = Self {
            numer,
            denom,
            denom_mono,
        };
        f.normalize();
        f
    }

    pub fn from_poly(p: MPolyZ) -> Self {
        Self::new(p, BigInt::one(), Monomial::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(MPolyZ::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MPolyZ::one())
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MPolyZ::var(v))
    }

    pub fn rational(r: &BigRational) -> Self {
        Self::new(MPolyZ::constant(r.numer().clone()), r.denom().clone(), Monomial::one())
    }

    pub fn numer(&self) -> &MPolyZ {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn denom_monomial(&self) -> &Monomial {
        &self.denom_mono
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one() && self.denom_mono.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MPolyZ> {
        self.is_polynomial().then_some(&self.numer)
    }

    fn normalize(&mut self) {
        if self.numer.is_zero() {
            self.denom = BigInt::one();
            self.denom_mono = Monomial::one();
            return;
        }
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            self.numer = -&self.numer;
        }
        let g = self.numer.content().gcd(&self.denom);
        if !g.is_one() {
            self.numer = self.numer.div_exact_scalar(&g).expect("content divides");
            self.denom = &self.denom / &g;
        }
        let common = self.numer.monomial_content().gcd(&self.denom_mono);
        if !common.is_one() {
            self.numer = self.numer.divide_by_monomial(&common).expect("monomial divides");
            self.denom_mono = common.quotient_of(&self.denom_mono).expect("monomial divides");
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(
            self.numer.scalar_mul(r.numer()),
            &self.denom * r.denom(),
            self.denom_mono,
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replaces `v` everywhere by `value`. `v` must not occur in the
    /// denominator monomial.
    pub fn substitute(&self, v: Var, value: &MPolyFrac) -> Result<Self, MathError> {
        if self.denom_mono.exponent(v) > 0 {
            return Err(MathError::NotDivisible(v.symbol().to_string()));
        }
        let mut acc = Self::zero();
        for (m, c) in self.numer.terms() {
            let e = m.exponent(v);
            let rest = MPolyZ::term(
                c.clone(),
                Monomial::var_pow(v, e).quotient_of(m).expect("exponent present"),
            );
            acc = &acc + &(&Self::from_poly(rest) * &value.pow(e));
        }
        Ok(Self::new(
            acc.numer,
            acc.denom * &self.denom,
            acc.denom_mono.mul(&self.denom_mono),
        ))
    }

    /// Evaluates at an assignment of every variable occurring in the fraction.
    pub fn evaluate(&self, assignment: &[(Var, BigInt)]) -> Result<BigRational, MathError> {
        let num = self.numer.evaluate(assignment)?;
        let mono = MPolyZ::term(1, self.denom_mono).evaluate(assignment)?;
        if mono.is_zero() {
            return Err(MathError::NotDivisible("0".into()));
        }
        Ok(BigRational::new(num, &self.denom * mono))
    }
}

impl From<i64> for MPolyFrac {
    fn from(c: i64) -> Self {
        Self::from_poly(MPolyZ::constant(c))
    }
}

impl From<MPolyZ> for MPolyFrac {
    fn from(p: MPolyZ) -> Self {
        Self::from_poly(p)
    }
}

impl Zero for MPolyFrac {
    fn zero() -> Self {
        MPolyFrac::zero()
    }

    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for &MPolyFrac {
    type Output = MPolyFrac;

    fn add(self, rhs: &MPolyFrac) -> MPolyFrac {
        let denom = self.denom.lcm(&rhs.denom);
        let mono = self.denom_mono.lcm(&rhs.denom_mono);
        let lift = |f: &MPolyFrac| {
            let k = &denom / &f.denom;
            let extra = f.denom_mono.quotient_of(&mono).expect("lcm divisible");
            f.numer.scalar_mul(&k).mul_monomial(&extra)
        };
        MPolyFrac::new(lift(self) + lift(rhs), denom, mono)
    }
}

impl Sub for &MPolyFrac {
    type Output = MPolyFrac;

    fn sub(self, rhs: &MPolyFrac) -> MPolyFrac {
        self + &(-rhs)
    }
}

impl Mul for &MPolyFrac {
    type Output = MPolyFrac;

    fn mul(self, rhs: &MPolyFrac) -> MPolyFrac {
        MPolyFrac::new(
            &self.numer * &rhs.numer,
            &self.denom * &rhs.denom,
            self.denom_mono.mul(&rhs.denom_mono),
        )
    }
}

impl Neg for &MPolyFrac {
    type Output = MPolyFrac;

    fn neg(self) -> MPolyFrac {
        MPolyFrac {
            numer: -&self.numer,
            denom: self.denom.clone(),
            denom_mono: self.denom_mono,
        }
    }
}

impl Add for MPolyFrac {
    type Output = MPolyFrac;

    fn add(self, rhs: MPolyFrac) -> MPolyFrac {
        &self + &rhs
    }
}

impl Sub for MPolyFrac {
    type Output = MPolyFrac;

    fn sub(self, rhs: MPolyFrac) -> MPolyFrac {
        &self - &rhs
    }
}

impl Mul for MPolyFrac {
    type Output = MPolyFrac;

    fn mul(self, rhs: MPolyFrac) -> MPolyFrac {
        &self * &rhs
    }
}

impl Neg for MPolyFrac {
    type Output = MPolyFrac;

    fn neg(self) -> MPolyFrac {
        -&self
    }
}

impl fmt::Display for MPolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.numer);
        }
        write!(f, "({})/", self.numer)?;
        match (self.denom.is_one(), self.denom_mono.is_one()) {
            (true, false) => write!(f, "{}", self.denom_mono),
            (false, true) => write!(f, "{}", self.denom),
            _ => write!(f, "{}{}", self.denom, self.denom_mono),
        }
    }
}
