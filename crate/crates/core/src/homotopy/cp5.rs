use num_bigint::BigInt;

use super::{require_dim, HomotopyCp, HomotopyError};
use crate::ktheory::{real_reduce, KClass, KOClass};

/// Checks on the explicit stable almost complex structure of a homotopy `CP^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cp5Report {
    pub real_reduction: KOClass,
    pub tangent: KOClass,
    pub c5: BigInt,
}

impl Cp5Report {
    pub fn reduction_matches(&self) -> bool {
        self.real_reduction == self.tangent
    }

    pub fn euler_matches(&self) -> bool {
        self.c5 == BigInt::from(6)
    }

    pub fn passed(&self) -> bool {
        self.reduction_matches() && self.euler_matches()
    }
}

/// `E = 6L + 12mL^2 + 80nL^3 + 43mL^4 + (-19m - 20n - 6m^2 + 80mn)L^5`.
pub fn cp5_structure(x: &HomotopyCp) -> Result<(KClass, Cp5Report), HomotopyError> {
    require_dim(x, 5)?;
    let (m, n) = (x.m(), x.n());
    let i = BigInt::from;
    let e = KClass::new(vec![
        i(0),
        i(6),
        i(12) * m,
        i(80) * n,
        i(43) * m,
        i(-19) * m - i(20) * n - i(6) * m * m + i(80) * m * n,
    ]);
    let total = e.total_chern();
    let c5 = total
        .integer_coeffs()
        .expect("Chern classes of K-classes are integral")[5]
        .clone();
    let report = Cp5Report {
        real_reduction: real_reduce(&e)?,
        tangent: x.tangent_ko_class(),
        c5,
    };
    Ok((e, report))
}
