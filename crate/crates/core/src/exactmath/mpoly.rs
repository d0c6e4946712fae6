use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{gcd_all, MathError};

/// The fixed variable universe. Declaration order is the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    C,
    M,
    N,
    Q,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::C, Var::M, Var::N, Var::Q];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::A => 'a',
            Var::C => 'c',
            Var::M => 'm',
            Var::N => 'n',
            Var::Q => 'q',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == ch)
    }
}

const NVARS: usize = Var::ALL.len();

/// Exponent vector over `a, c, m, n, q`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Self(exps)
    }

    pub fn from_exponents(exps: [u32; NVARS]) -> Self {
        Self(exps)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> [u32; NVARS] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0) {
            *e += o;
        }
        Monomial(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.0;
        for (e, s) in exps.iter_mut().zip(self.0) {
            *e -= s;
        }
        Some(Monomial(exps))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0) {
            *e = (*e).min(o);
        }
        Monomial(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0) {
            *e = (*e).max(o);
        }
        Monomial(exps)
    }

    fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let mut exps = self.0;
        exps[v.index()] = e;
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in Var::ALL {
            match self.exponent(v) {
                0 => {}
                1 => write!(f, "{}", v.symbol())?,
                e => write!(f, "{}^{}", v.symbol(), e)?,
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct MPolyZ {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, c.into());
        p
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    /// Variables with a nonzero exponent somewhere, in universe order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        gcd_all(self.terms.values())
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Result<Self, MathError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(MathError::NotDivisible(k.to_string()));
            }
            out.terms.insert(*m, q);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces `v` by the integer `value`.
    pub fn substitute(&self, v: Var, value: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let coeff = c * num_traits::pow(value.clone(), e as usize);
            out.add_term(m.with_exponent(v, 0), coeff);
        }
        out
    }

    /// Replaces `v` by a polynomial.
    pub fn substitute_poly(&self, v: Var, value: &MPolyZ) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let rest = Self::term(c.clone(), m.with_exponent(v, 0));
            out = out + &rest * &value.pow(m.exponent(v));
        }
        out
    }

    /// Evaluates at an assignment covering every variable that occurs.
    pub fn evaluate(&self, assignment: &[(Var, BigInt)]) -> Result<BigInt, MathError> {
        let mut p = self.clone();
        for (v, x) in assignment {
            p = p.substitute(*v, x);
        }
        if let Some(v) = p.variables().first() {
            return Err(MathError::Unassigned(v.symbol()));
        }
        Ok(p.constant_term())
    }

    /// Divides every term by `v`; fails if some term is free of `v`.
    pub fn divide_by_variable(&self, v: Var) -> Result<Self, MathError> {
        self.divide_by_monomial(&Monomial::var(v))
            .map_err(|_| MathError::NotDivisible(v.symbol().to_string()))
    }

    pub fn divide_by_monomial(&self, mono: &Monomial) -> Result<Self, MathError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let q = mono
                .quotient_of(m)
                .ok_or_else(|| MathError::NotDivisible(mono.to_string()))?;
            out.terms.insert(q, c.clone());
        }
        Ok(out)
    }

    pub fn is_divisible_by_variable(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exponent(v) > 0)
    }

    /// The terms in which `v` does not occur.
    pub fn terms_free_of(&self, v: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Coefficients reduced into `[0, p)`, after fixing each listed variable
    /// to the given residue class.
    pub fn reduce_mod(&self, p: u64, fixed: &[(Var, i64)]) -> Self {
        let modulus = BigInt::from(p);
        let mut reduced = self.clone();
        for (v, r) in fixed {
            reduced = reduced.substitute(*v, &BigInt::from(*r));
        }
        let mut out = Self::zero();
        for (m, c) in reduced.terms {
            out.add_term(m, c.mod_floor(&modulus));
        }
        out
    }

    /// Reduction modulo a prime `p` as a function on `(Z/p)^5`: coefficients
    /// into `[0, p)` and every exponent `e >= p` lowered using `x^p = x`.
    pub fn fermat_reduce(&self, p: u64) -> Self {
        let modulus = BigInt::from(p);
        let period = (p - 1) as u32;
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut exps = m.exponents();
            for e in exps.iter_mut() {
                if *e >= p as u32 {
                    *e = (*e - 1) % period + 1;
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        let mut folded = Self::zero();
        for (m, c) in out.terms {
            folded.add_term(m, c.mod_floor(&modulus));
        }
        folded
    }

    /// True when every coefficient is divisible by `k`.
    pub fn coefficients_divisible_by(&self, k: &BigInt) -> bool {
        self.terms.values().all(|c| c.is_multiple_of(k))
    }
}

impl From<i64> for MPolyZ {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for MPolyZ {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &MPolyZ {
    type Output = MPolyZ;

    fn add(self, rhs: &MPolyZ) -> MPolyZ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPolyZ {
    type Output = MPolyZ;

    fn sub(self, rhs: &MPolyZ) -> MPolyZ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MPolyZ {
    type Output = MPolyZ;

    fn mul(self, rhs: &MPolyZ) -> MPolyZ {
        let mut out = MPolyZ::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPolyZ {
    type Output = MPolyZ;

    fn neg(self) -> MPolyZ {
        MPolyZ {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for MPolyZ {
            type Output = MPolyZ;
            fn $f(self, rhs: MPolyZ) -> MPolyZ { (&self).$f(&rhs) }
        }
        impl $tr<&MPolyZ> for MPolyZ {
            type Output = MPolyZ;
            fn $f(self, rhs: &MPolyZ) -> MPolyZ { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for MPolyZ {
    type Output = MPolyZ;

    fn neg(self) -> MPolyZ {
        -&self
    }
}

impl fmt::Display for MPolyZ {
    /// Terms in descending graded-lex order, e.g. `31a^6 - 8277a^4 + 22785`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MPolyZ {
    type Err = MathError;

    /// Parses sums of terms such as `-5184m^2 - 2160m - 525` or `2032128amn`.
    /// Variables are single letters from `a, c, m, n, q`; `*` between factors
    /// is optional.
    fn from_str(s: &str) -> Result<Self, MathError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(MathError::Parse("empty input".into()));
        }
        let mut out = MPolyZ::zero();
        let mut pos = 0;
        while pos < chars.len() {
            let mut negative = false;
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    negative = !negative;
                }
                pos += 1;
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if pos > start {
                chars[start..pos]
                    .iter()
                    .collect::<String>()
                    .parse::<BigInt>()
                    .map_err(|e| MathError::Parse(e.to_string()))?
            } else {
                BigInt::one()
            };
            let mut mono = Monomial::one();
            let mut saw_factor = pos > start;
            while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
                if chars[pos] == '*' {
                    pos += 1;
                    continue;
                }
                let v = Var::from_symbol(chars[pos])
                    .ok_or_else(|| MathError::Parse(format!("unexpected '{}'", chars[pos])))?;
                pos += 1;
                let mut e = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let es = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    e = chars[es..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| MathError::Parse("bad exponent".into()))?;
                }
                mono = mono.mul(&Monomial::var_pow(v, e));
                saw_factor = true;
            }
            if !saw_factor {
                return Err(MathError::Parse(format!("empty term at {start}")));
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}
