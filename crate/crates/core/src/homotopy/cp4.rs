use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{direct, require_dim, sort_solutions, AcsSolution, HomotopyCp, HomotopyError};
use crate::exactmath::divisors_signed;

/// `D(m) = 25 + 3 (576 m^2 + 240 m) / 7`.
pub fn divisor_target_cp4(m: &BigInt) -> BigRational {
    let poly = BigInt::from(576) * m * m + BigInt::from(240) * m;
    BigRational::from_integer(BigInt::from(25)) + BigRational::new(poly * BigInt::from(3), BigInt::from(7))
}

/// The `n` making `(m, n)` valid, if any.
pub fn valid_cp4_n(m: &BigInt) -> Option<BigInt> {
    let num = BigInt::from(4) * m * m - BigInt::from(10) * m;
    let (n, r) = num.div_rem(&BigInt::from(28));
    r.is_zero().then_some(n)
}

pub fn cp4_divisor_target(x: &HomotopyCp) -> Result<BigInt, HomotopyError> {
    require_dim(x, 4)?;
    let d = divisor_target_cp4(x.m());
    if !d.is_integer() {
        return Err(HomotopyError::CrossCheck(format!("D(m) = {d} is not an integer")));
    }
    let d = d.to_integer();
    if d.is_zero() {
        return Err(HomotopyError::ZeroTarget);
    }
    Ok(d)
}

/// Admissible `c_1` by the divisor criterion: all signed divisors of `D(m)`.
pub fn acs_divisor_cp4(x: &HomotopyCp) -> Result<Vec<BigInt>, HomotopyError> {
    Ok(divisors_signed(&cp4_divisor_target(x)?)?)
}

/// Direct test of every `0 < |a| <= a_max`: complete the Chern vector and
/// check integrality of `Q^-1 C`.
pub fn acs_scan_cp4(x: &HomotopyCp, a_max: &BigInt) -> Result<Vec<AcsSolution>, HomotopyError> {
    require_dim(x, 4)?;
    let p = x.pontrjagin_closed_form()?.integers()?;
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while &a <= a_max {
        for s in [-&a, a.clone()] {
            match direct(4, &p, &s, None) {
                Ok(sol) => out.push(sol),
                Err(HomotopyError::NoCompletion { .. }) | Err(HomotopyError::Chern(_)) => {}
                Err(e) => return Err(e),
            }
        }
        a += 1;
    }
    sort_solutions(&mut out);
    Ok(out)
}

/// Solutions from the divisor criterion, checked against a direct scan over
/// `|a| <= |D(m)|`.
pub fn acs_search_cp4(x: &HomotopyCp) -> Result<Vec<AcsSolution>, HomotopyError> {
    let criterion: BTreeSet<BigInt> = acs_divisor_cp4(x)?.into_iter().collect();
    let target = cp4_divisor_target(x)?;
    let scanned = acs_scan_cp4(x, &target.abs())?;
    let direct_set: BTreeSet<BigInt> = scanned.iter().map(|s| s.a.clone()).collect();
    if criterion != direct_set {
        let only_criterion: Vec<String> = criterion.difference(&direct_set).map(ToString::to_string).collect();
        let only_direct: Vec<String> = direct_set.difference(&criterion).map(ToString::to_string).collect();
        return Err(HomotopyError::CrossCheck(format!(
            "{x}: divisor criterion only {only_criterion:?}, direct only {only_direct:?}"
        )));
    }
    Ok(scanned)
}
