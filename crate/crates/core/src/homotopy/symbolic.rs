//! Symbolic versions of the `CP^4`, `CP^5` and `CP^6` computations, over
//! polynomials in `a = c_1`, `c = c_3`, `m`, `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::HomotopyError;
use crate::chernvec::{newton_power_sums, q_matrix};
use crate::exactmath::{factorial, MPolyFrac, MPolyZ, Monomial, Var};
use crate::ktheory::KClass;

type Series = Vec<MPolyFrac>;

fn poly(s: &str) -> MPolyZ {
    s.parse().expect("well-formed polynomial literal")
}

fn frac(s: &str, denom: i64) -> MPolyFrac {
    MPolyFrac::new(poly(s), BigInt::from(denom), Monomial::one())
}

fn series_mul(x: &Series, y: &Series) -> Series {
    let d = x.len() - 1;
    let mut out = vec![MPolyFrac::zero(); d + 1];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate().take(d + 1 - i) {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

/// `base^k` for `base = 1 + x`, `x` without constant term, via the binomial
/// series `sum_j C(k, j) x^j` with symbolic `k`.
fn series_pow(base: &Series, k: &MPolyFrac) -> Series {
    let d = base.len() - 1;
    let mut x = base.clone();
    x[0] = MPolyFrac::zero();
    let mut out = vec![MPolyFrac::zero(); d + 1];
    out[0] = MPolyFrac::one();
    let mut x_pow = out.clone();
    let mut falling = MPolyFrac::one();
    for j in 1..=d {
        x_pow = series_mul(&x_pow, &x);
        falling = &falling * &(k - &MPolyFrac::from(j as i64 - 1));
        let coeff = falling.scale(&BigRational::new(BigInt::one(), factorial(j as u32)));
        for (o, t) in out.iter_mut().zip(&x_pow) {
            *o = &*o + &(&coeff * t);
        }
    }
    out
}

fn chern_series_of_l_power(d: usize, i: usize) -> Series {
    KClass::l_pow(d, i)
        .total_chern()
        .coeffs()
        .iter()
        .map(MPolyFrac::rational)
        .collect()
}

/// `c_5` of `sum_i k_i L^i` in `K(CP^5)` as a polynomial in the `k_i`.
fn c5_of(k: &[MPolyFrac; 5]) -> Result<MPolyZ, HomotopyError> {
    let mut total: Series = vec![MPolyFrac::zero(); 6];
    total[0] = MPolyFrac::one();
    for (i, ki) in k.iter().enumerate() {
        total = series_mul(&total, &series_pow(&chern_series_of_l_power(5, i + 1), ki));
    }
    total[5]
        .as_polynomial()
        .cloned()
        .ok_or_else(|| HomotopyError::CrossCheck(format!("c_5 = {} is not a polynomial", total[5])))
}

/// The symbolic `CP^5` check: with `k_1 = 6`, `k_2 = 12m` and free
/// `k_3, k_4, k_5` (stored as the variables `a, c, q`), `c_5(E) = 6 + 6K`;
/// substituting the chosen `k_i` makes `K` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cp5Symbolic {
    pub c5_generic: MPolyZ,
    pub k_generic: MPolyZ,
    pub k_substituted: MPolyZ,
    pub c5_substituted: MPolyZ,
    /// Coefficients of `mn` contributed by `4 k_5` and by `-4 m k_3`.
    pub mn_contributions: (BigInt, BigInt),
}

impl Cp5Symbolic {
    pub fn c5_is_six_plus_six_k(&self) -> bool {
        &self.c5_generic - &MPolyZ::constant(6) == self.k_generic.scalar_mul(&BigInt::from(6))
    }

    pub fn passed(&self) -> bool {
        self.c5_is_six_plus_six_k()
            && self.k_substituted.is_zero()
            && self.c5_substituted == MPolyZ::constant(6)
            && &self.mn_contributions.0 + &self.mn_contributions.1 == BigInt::zero()
    }
}

pub fn symbolic_verify_cp5() -> Result<Cp5Symbolic, HomotopyError> {
    let k1 = MPolyFrac::from(6);
    let k2 = MPolyFrac::from(poly("12m"));
    let generic = [k1.clone(), k2.clone(), MPolyFrac::var(Var::A), MPolyFrac::var(Var::C), MPolyFrac::var(Var::Q)];
    let c5_generic = c5_of(&generic)?;
    let k_generic = poly("a + 2c + 4q + 24m^2 - 10m - 4am");

    let k3 = poly("80n");
    let k4 = poly("43m");
    let k5 = poly("-19m - 20n - 6m^2 + 80mn");
    let k_substituted = k_generic
        .substitute_poly(Var::A, &k3)
        .substitute_poly(Var::C, &k4)
        .substitute_poly(Var::Q, &k5);
    let chosen = [k1, k2, k3.clone().into(), k4.into(), k5.clone().into()];
    let c5_substituted = c5_of(&chosen)?;

    let mn = Monomial::from_exponents([0, 0, 1, 1, 0]);
    let four_k5 = k5.scalar_mul(&BigInt::from(4));
    let minus_4m_k3 = &poly("-4m") * &k3;
    Ok(Cp5Symbolic {
        c5_generic,
        k_generic,
        k_substituted,
        c5_substituted,
        mn_contributions: (four_k5.coeff(&mn), minus_4m_k3.coeff(&mn)),
    })
}

/// `v = Q^-1 C` for a symbolic Chern vector, split as `f_i / (D_i a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeratorReport {
    /// The Chern vector `(c_1, ..., c_d)`.
    pub chern: Vec<MPolyFrac>,
    pub rows: Vec<MPolyFrac>,
    /// Integer parts `D_i` of the row denominators.
    pub denominators: Vec<BigInt>,
    /// `f_i = v_i D_i a`.
    pub numerators: Vec<MPolyZ>,
    /// The `a`-free part of the reference numerator.
    pub f: MPolyZ,
    /// `k_i` with `f_i - k_i f` divisible by `a`, when such `k_i` exists.
    pub multiples: Vec<Option<BigInt>>,
}

impl NumeratorReport {
    /// Every row has denominator `D_i a` and `f_i - k_i f` is divisible by `a`.
    pub fn rows_split(&self) -> bool {
        let a = Monomial::var(Var::A);
        self.rows.iter().all(|r| r.denom_monomial() == &a)
            && self.numerators.iter().zip(&self.multiples).all(|(fi, k)| match k {
                Some(k) => (fi - &self.f.scalar_mul(k)).is_divisible_by_variable(Var::A),
                None => false,
            })
    }
}

/// Scalar `k` with `g = k f`, if any.
fn scalar_multiple(g: &MPolyZ, f: &MPolyZ) -> Option<BigInt> {
    if f.is_zero() {
        return g.is_zero().then(BigInt::zero);
    }
    let (mono, lead) = f.terms().next_back()?;
    let gc = g.coeff(mono);
    if (&gc % lead) != BigInt::zero() {
        return None;
    }
    let k = gc / lead;
    (g == &f.scalar_mul(&k)).then_some(k)
}

/// Solves the Pontrjagin relation for the unknown Chern classes over
/// fractions. `c_1 = a`, `c_d = d + 1`, and `c_3 = c` when `d = 6`.
fn complete_symbolic(d: usize, p: &[MPolyFrac]) -> Vec<MPolyFrac> {
    let mut c: Vec<Option<MPolyFrac>> = vec![None; d + 1];
    c[0] = Some(MPolyFrac::one());
    c[1] = Some(MPolyFrac::var(Var::A));
    c[d] = Some(MPolyFrac::from(d as i64 + 1));
    if d == 6 {
        c[3] = Some(MPolyFrac::var(Var::C));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for k in 1..=d / 2 {
        let target = if 2 * k < d { 2 * k } else { 2 * k - 1 };
        let mut rest = if k % 2 == 0 { -&p[k - 1] } else { p[k - 1].clone() };
        for i in 0..=2 * k {
            if i == target || 2 * k - i == target {
                continue;
            }
            let term = c[i].as_ref().expect("known") * c[2 * k - i].as_ref().expect("known");
            rest = if i % 2 == 0 { &rest + &term } else { &rest - &term };
        }
        let solved = if target == 2 * k {
            (-rest).scale(&half)
        } else {
            &rest * &MPolyFrac::new(MPolyZ::one(), BigInt::from(2), Monomial::var(Var::A))
        };
        c[target] = Some(solved);
    }
    c.into_iter().skip(1).map(|x| x.expect("solved")).collect()
}

fn numerator_report(d: usize, p: &[MPolyFrac], reference: usize) -> Result<NumeratorReport, HomotopyError> {
    let chern = complete_symbolic(d, p);
    let sums = newton_power_sums(&chern);
    let q_inv = q_matrix(d).inverse()?;
    let rows: Vec<MPolyFrac> = (0..d)
        .map(|i| {
            q_inv
                .row(i)
                .iter()
                .zip(&sums)
                .fold(MPolyFrac::zero(), |acc, (w, s)| &acc + &s.scale(w))
        })
        .collect();
    let denominators: Vec<BigInt> = rows.iter().map(|r| r.denom().clone()).collect();
    let numerators: Vec<MPolyZ> = rows
        .iter()
        .map(|r| {
            let cleared = r * &MPolyFrac::from_poly(MPolyZ::term(r.denom().clone(), Monomial::var(Var::A)));
            cleared
                .as_polynomial()
                .cloned()
                .ok_or_else(|| HomotopyError::CrossCheck(format!("row {r} has a denominator other than D a")))
        })
        .collect::<Result<_, _>>()?;
    let f = numerators[reference].terms_free_of(Var::A);
    let multiples = numerators
        .iter()
        .map(|fi| scalar_multiple(&fi.terms_free_of(Var::A), &f))
        .collect();
    Ok(NumeratorReport {
        chern,
        rows,
        denominators,
        numerators,
        f,
        multiples,
    })
}

/// `Q^-1 C` on `CP^6` with `q` eliminated through the defining equation.
pub fn symbolic_cp6_numerators() -> Result<NumeratorReport, HomotopyError> {
    symbolic_cp6_numerators_with_p2(&poly("21 + 288m^2 - 432m - 1440n"))
}

/// As [`symbolic_cp6_numerators`] with `p_2` replaced by a polynomial in `m, n`.
pub fn symbolic_cp6_numerators_with_p2(p2: &MPolyZ) -> Result<NumeratorReport, HomotopyError> {
    let q = frac("-32m^3 + 252m^2 - 301m + 672mn - 1152n", 1488);
    let p3 = MPolyFrac::from(poly("35 + 2304m^3 - 12384m^2 + 11592m - 34560mn + 40320n + 60480q"))
        .substitute(Var::Q, &q)?;
    let p = [
        MPolyFrac::from(poly("7 + 24m")),
        MPolyFrac::from(p2.clone()),
        p3,
    ];
    numerator_report(6, &p, 0)
}

/// `Q^-1 C` on `CP^4`; `p_2` is already free of `n`.
pub fn symbolic_cp4_numerators() -> Result<NumeratorReport, HomotopyError> {
    let p = [
        MPolyFrac::from(poly("5 + 24m")),
        &MPolyFrac::from(10) + &frac("576m^2 + 240m", 7),
    ];
    numerator_report(4, &p, 1)
}
