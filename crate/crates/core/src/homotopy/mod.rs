//! Smooth homotopy `CP^d` for `d` in `{4, 5, 6}`, parametrised by their
//! stable tangent class, and the search for almost complex structures.
//!
//! A structure is a stable complex class `E` with `r(E) = TX` whose Chern
//! classes satisfy `c(E) c(conj E) = p(X)` (signed) and `c_d(E) = d + 1`.
//! On `CP^4` and `CP^6` this reduces to integrality of `Q^-1 C`.

mod cp4;
mod cp5;
mod cp6;
mod symbolic;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chernvec::{realizable, ChernError, ChernVector, Decomposition};
use crate::exactmath::MathError;
use crate::ktheory::{KOClass, KTheoryError};

pub use cp4::{
    acs_divisor_cp4, acs_scan_cp4, acs_search_cp4, cp4_divisor_target, divisor_target_cp4, valid_cp4_n,
};
pub use cp5::{cp5_structure, Cp5Report};
pub use cp6::{
    acs_criterion_cp6, acs_scan_cp6, acs_search_cp6, cp6_criterion, cp6_divisor_target, cp6_exists, Cp6Criterion,
    cp6_triples, mod31_table, SearchWindow, PUBLISHED_MOD31,
};
pub use symbolic::{
    symbolic_cp4_numerators, symbolic_cp6_numerators, symbolic_cp6_numerators_with_p2, symbolic_verify_cp5, Cp5Symbolic, NumeratorReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("constraint violated: {equation} (residual {residual})")]
    ConstraintViolated { equation: String, residual: BigInt },
    #[error("homotopy CP^{0} is not modelled here")]
    UnsupportedDimension(usize),
    #[error("parameter {0} is required for this dimension")]
    MissingParameter(&'static str),
    #[error("parameter {0} is not used in this dimension")]
    UnexpectedParameter(&'static str),
    #[error("c_1 = 0 leaves odd Chern classes undetermined")]
    ZeroFirstChern,
    #[error("c_{index} = {value} is not an integer")]
    NoCompletion { index: usize, value: BigRational },
    #[error("divisor target is zero")]
    ZeroTarget,
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    KTheory(#[from] KTheoryError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// A homotopy `CP^d`, with `TX = T CP^d + m xi_1 + n xi_2 (+ q xi_3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyCp {
    dim: usize,
    m: BigInt,
    n: BigInt,
    q: Option<BigInt>,
}

pub const CONSTRAINT_CP4: &str = "4m^2 - 10m - 28n = 0";
pub const CONSTRAINT_CP5: &str = "m = 0 mod 2";
pub const CONSTRAINT_CP6: &str = "32m^3 - 252m^2 + 301m - 672mn + 1152n + 1488q = 0";

fn i(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Left-hand side of the defining equation, zero iff valid.
/// For `d = 5` this is `m mod 2`.
pub fn constraint_residual(d: usize, m: &BigInt, n: &BigInt, q: &BigInt) -> Result<BigInt, HomotopyError> {
    Ok(match d {
        4 => i(4) * m * m - i(10) * m - i(28) * n,
        5 => m.mod_floor(&i(2)),
        6 => {
            i(32) * m * m * m - i(252) * m * m + i(301) * m - i(672) * m * n + i(1152) * n + i(1488) * q
        }
        _ => return Err(HomotopyError::UnsupportedDimension(d)),
    })
}

impl HomotopyCp {
    /// Validates the parameters; `q` is required exactly when `d = 6`.
    pub fn new(d: usize, m: BigInt, n: BigInt, q: Option<BigInt>) -> Result<Self, HomotopyError> {
        let q_val = match (d, &q) {
            (6, None) => return Err(HomotopyError::MissingParameter("q")),
            (6, Some(q)) => q.clone(),
            (4 | 5, Some(_)) => return Err(HomotopyError::UnexpectedParameter("q")),
            (4 | 5, None) => BigInt::zero(),
            _ => return Err(HomotopyError::UnsupportedDimension(d)),
        };
        let residual = constraint_residual(d, &m, &n, &q_val)?;
        if !residual.is_zero() {
            let equation = match d {
                4 => CONSTRAINT_CP4,
                5 => CONSTRAINT_CP5,
                _ => CONSTRAINT_CP6,
            };
            return Err(HomotopyError::ConstraintViolated {
                equation: equation.to_string(),
                residual,
            });
        }
        Ok(Self { dim: d, m, n, q })
    }

    pub fn from_ints(d: usize, m: i64, n: i64, q: Option<i64>) -> Result<Self, HomotopyError> {
        Self::new(d, m.into(), n.into(), q.map(BigInt::from))
    }

    /// The standard `CP^d`.
    pub fn standard(d: usize) -> Result<Self, HomotopyError> {
        Self::new(d, BigInt::zero(), BigInt::zero(), (d == 6).then(BigInt::zero))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn q(&self) -> Option<&BigInt> {
        self.q.as_ref()
    }

    /// Reduced stable tangent class in `KO(CP^d)`.
    pub fn tangent_ko_class(&self) -> KOClass {
        let (m, n) = (&self.m, &self.n);
        let w1 = i(self.dim as i64 + 1) + i(24) * m;
        let w2 = i(98) * m + i(240) * n;
        let coeffs = match self.dim {
            4 => vec![BigInt::zero(), w1, w2],
            5 => vec![BigInt::zero(), w1, w2, m.clone()],
            _ => {
                let q = self.q.as_ref().expect("validated");
                vec![BigInt::zero(), w1, w2, i(111) * m + i(380) * n + i(504) * q]
            }
        };
        KOClass::new(self.dim, coeffs).expect("validated dimension")
    }

    /// Pontrjagin numbers from the closed formulas in `m, n, q`.
    pub fn pontrjagin_closed_form(&self) -> Result<PontrjaginData, HomotopyError> {
        let (m, n) = (&self.m, &self.n);
        let r = |x: BigInt| BigRational::from_integer(x);
        let p = match self.dim {
            4 => vec![
                r(i(5) + i(24) * m),
                r(i(10)) + BigRational::new(i(576) * m * m + i(240) * m, i(7)),
            ],
            6 => {
                let q = self.q.as_ref().expect("validated");
                let m2 = m * m;
                let m3 = &m2 * m;
                vec![
                    r(i(7) + i(24) * m),
                    r(i(21) + i(288) * &m2 - i(432) * m - i(1440) * n),
                    r(i(35) + i(2304) * m3 - i(12384) * &m2 + i(11592) * m - i(34560) * m * n
                        + i(40320) * n
                        + i(60480) * q),
                ]
            }
            d => return Err(HomotopyError::UnsupportedDimension(d)),
        };
        Ok(PontrjaginData { p })
    }

    /// Pontrjagin numbers from the KO class of `TX`.
    pub fn pontrjagin_from_ko(&self) -> Result<PontrjaginData, HomotopyError> {
        if self.dim == 5 {
            return Err(HomotopyError::UnsupportedDimension(5));
        }
        let total = self.tangent_ko_class().pontrjagin_total()?;
        Ok(PontrjaginData {
            p: (1..=self.dim / 2).map(|k| total.coeff(2 * k).clone()).collect(),
        })
    }

    /// `p_i(X)`, computed both ways; they must agree.
    pub fn pontrjagin(&self) -> Result<PontrjaginData, HomotopyError> {
        let closed = self.pontrjagin_closed_form()?;
        let via_ko = self.pontrjagin_from_ko()?;
        if closed != via_ko {
            return Err(HomotopyError::CrossCheck(format!(
                "Pontrjagin classes of {self}: closed form {closed} but KO gives {via_ko}"
            )));
        }
        Ok(closed)
    }

    /// Completes `(a, c_2, ..)` to a Chern vector with `c_d = d + 1`
    /// satisfying the Pontrjagin relation. For `d = 6`, `c = c_3` is free.
    pub fn complete_chern_vector(&self, a: &BigInt, c: Option<&BigInt>) -> Result<ChernVector, HomotopyError> {
        let p = self.pontrjagin_closed_form()?.integers()?;
        complete(self.dim, &p, a, c)
    }

    /// Completion followed by the realizability test.
    pub fn direct_solution(&self, a: &BigInt, c: Option<&BigInt>) -> Result<AcsSolution, HomotopyError> {
        let p = self.pontrjagin_closed_form()?.integers()?;
        direct(self.dim, &p, a, c)
    }
}

impl fmt::Display for HomotopyCp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.q {
            Some(q) => write!(f, "X_({}, {}, {})", self.m, self.n, q),
            None => write!(f, "X_({}, {})", self.m, self.n),
        }
    }
}

/// `p_i(X) = p[i-1] u^{2i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontrjaginData {
    pub p: Vec<BigRational>,
}

impl PontrjaginData {
    pub fn integers(&self) -> Result<Vec<BigInt>, HomotopyError> {
        self.p
            .iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(HomotopyError::CrossCheck(format!("non-integral Pontrjagin class {x}")))
                }
            })
            .collect()
    }
}

impl fmt::Display for PontrjaginData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.p.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An almost complex structure: `c_1 = a` (and `c_3 = c` when `d = 6`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AcsSolution {
    pub a: BigInt,
    pub c: Option<BigInt>,
    pub full_chern: ChernVector,
    pub decomposition: Decomposition,
}

impl AcsSolution {
    fn key(&self) -> (BigInt, Option<BigInt>) {
        (self.a.clone(), self.c.clone())
    }
}

pub(crate) fn sort_solutions(v: &mut [AcsSolution]) {
    v.sort_by_key(AcsSolution::key);
}

fn exact_div(num: BigInt, den: &BigInt, index: usize) -> Result<BigInt, HomotopyError> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(HomotopyError::NoCompletion {
            index,
            value: BigRational::new(num, den.clone()),
        })
    }
}

/// Solves `sum_i (-1)^i c_i c_{2k-i} = (-1)^k p_k` degree by degree. At step
/// `k` the unknown is `c_{2k}` if `2k < d`, else `c_{2k-1}` (`c_d` is fixed).
pub(crate) fn complete(d: usize, p: &[BigInt], a: &BigInt, c3: Option<&BigInt>) -> Result<ChernVector, HomotopyError> {
    match d {
        4 | 6 => {}
        _ => return Err(HomotopyError::UnsupportedDimension(d)),
    }
    if a.is_zero() {
        return Err(HomotopyError::ZeroFirstChern);
    }
    let mut c: Vec<Option<BigInt>> = vec![None; d + 1];
    c[0] = Some(BigInt::one());
    c[1] = Some(a.clone());
    c[d] = Some(BigInt::from(d + 1));
    if d == 6 {
        c[3] = Some(c3.ok_or(HomotopyError::MissingParameter("c"))?.clone());
    } else if c3.is_some() {
        return Err(HomotopyError::UnexpectedParameter("c"));
    }
    for k in 1..=d / 2 {
        let target = if 2 * k < d { 2 * k } else { 2 * k - 1 };
        let mut rest = if k % 2 == 0 { -&p[k - 1] } else { p[k - 1].clone() };
        for i in 0..=2 * k {
            if i == target || 2 * k - i == target {
                continue;
            }
            let term = c[i].as_ref().expect("known") * c[2 * k - i].as_ref().expect("known");
            if i % 2 == 0 {
                rest += term;
            } else {
                rest -= term;
            }
        }
        let (num, den) = if target == 2 * k {
            (-rest, BigInt::from(2))
        } else {
            (rest, BigInt::from(2) * a)
        };
        c[target] = Some(exact_div(num, &den, target)?);
    }
    Ok(ChernVector::new(c.into_iter().skip(1).map(|x| x.expect("solved")).collect()))
}

pub(crate) fn direct(d: usize, p: &[BigInt], a: &BigInt, c: Option<&BigInt>) -> Result<AcsSolution, HomotopyError> {
    let full_chern = complete(d, p, a, c)?;
    let decomposition = realizable(&full_chern)?;
    Ok(AcsSolution {
        a: a.clone(),
        c: c.cloned(),
        full_chern,
        decomposition,
    })
}

pub(crate) fn require_dim(x: &HomotopyCp, d: usize) -> Result<(), HomotopyError> {
    if x.dim == d {
        Ok(())
    } else {
        Err(HomotopyError::UnsupportedDimension(x.dim))
    }
}
