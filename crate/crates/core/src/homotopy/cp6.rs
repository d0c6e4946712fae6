use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{constraint_residual, direct, require_dim, sort_solutions, AcsSolution, HomotopyCp, HomotopyError};

/// Bounds `|a| <= a_max`, `|c| <= c_max` for the `CP^6` search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchWindow {
    pub a_max: i64,
    pub c_max: i64,
}

impl Default for SearchWindow {
    fn default() -> Self {
        Self { a_max: 200, c_max: 200 }
    }
}

/// The `(m, n)` residues mod 31 admitting a solution, as printed in the
/// literature (30 pairs; `m = 15` has none).
pub const PUBLISHED_MOD31: [(u32, u32); 30] = [
    (0, 0),
    (6, 25),
    (12, 10),
    (19, 27),
    (25, 26),
    (1, 7),
    (7, 15),
    (13, 2),
    (20, 12),
    (26, 27),
    (2, 6),
    (8, 23),
    (14, 16),
    (21, 27),
    (27, 8),
    (3, 9),
    (9, 24),
    (16, 11),
    (22, 13),
    (28, 6),
    (4, 7),
    (10, 4),
    (17, 12),
    (23, 18),
    (29, 12),
    (5, 6),
    (11, 28),
    (18, 3),
    (24, 17),
    (30, 7),
];

/// All `(m, n)` mod 31 with `32m^3 - 252m^2 + 301m - 672mn + 1152n = 0 mod 31`,
/// sorted.
pub fn mod31_table() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 0..31i64 {
        for n in 0..31i64 {
            let v = 32 * m * m * m - 252 * m * m + 301 * m - 672 * m * n + 1152 * n;
            if v.rem_euclid(31) == 0 {
                out.push((m as u32, n as u32));
            }
        }
    }
    out
}

/// Valid triples with `m` in `[m_min, m_max]` and `|n| <= n_abs`.
pub fn cp6_triples(m_min: i64, m_max: i64, n_abs: i64) -> Vec<HomotopyCp> {
    let mut out = Vec::new();
    for m in m_min..=m_max {
        for n in -n_abs..=n_abs {
            let (m_b, n_b) = (BigInt::from(m), BigInt::from(n));
            let lhs = constraint_residual(6, &m_b, &n_b, &BigInt::zero()).expect("d = 6");
            let (q, r) = (-lhs).div_rem(&BigInt::from(1488));
            if r.is_zero() {
                out.push(HomotopyCp::new(6, m_b, n_b, Some(q)).expect("constraint solved"));
            }
        }
    }
    out
}

/// Which form of the `CP^6` criterion to apply.
///
/// `Published` is the criterion as it appears in the literature: it requires
/// `m = 0 mod 3` and uses a divisor target whose `m^2`, `m^3` terms come from
/// `p_2` with `228m^2`. `Consistent` keeps the residue conditions but takes the
/// target from `p_2 = 21 + 288m^2 - 432m - 1440n` and has no condition on `m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Cp6Criterion {
    Published,
    #[default]
    Consistent,
}

impl Cp6Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Cp6Criterion::Published => "published",
            Cp6Criterion::Consistent => "consistent",
        }
    }
}

impl std::str::FromStr for Cp6Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "published" => Ok(Cp6Criterion::Published),
            "consistent" => Ok(Cp6Criterion::Consistent),
            other => Err(format!("unknown criterion '{other}'")),
        }
    }
}

/// Whether `X` admits an almost complex structure.
///
/// `Published` answers `m = 0 mod 3`. `Consistent` checks the pair
/// `(a, c) = (1, 1)` directly, which the consistent criterion always accepts.
pub fn cp6_exists(x: &HomotopyCp, criterion: Cp6Criterion) -> Result<bool, HomotopyError> {
    require_dim(x, 6)?;
    match criterion {
        Cp6Criterion::Published => Ok(x.m().mod_floor(&BigInt::from(3)).is_zero()),
        Cp6Criterion::Consistent => {
            let p = x.pontrjagin_closed_form()?.integers()?;
            match direct(6, &p, &BigInt::one(), Some(&BigInt::one())) {
                Ok(_) => Ok(true),
                Err(HomotopyError::NoCompletion { .. }) | Err(HomotopyError::Chern(_)) => Ok(false),
                Err(e) => Err(e),
            }
        }
    }
}

/// `147 - 8c^2 + P(m, n)/31`, with
/// `P = -1152m^3 + 931632m^2 + 2488320mn + 262584m - 362880n` (published) or
/// `P = -179712m^3 + 879552m^2 + 2488320mn + 262584m - 362880n` (consistent).
pub fn cp6_divisor_target(x: &HomotopyCp, c: &BigInt, criterion: Cp6Criterion) -> Result<BigRational, HomotopyError> {
    require_dim(x, 6)?;
    let (m, n) = (x.m(), x.n());
    let i = BigInt::from;
    let (cubic, quadratic) = match criterion {
        Cp6Criterion::Published => (i(-1152), i(931632)),
        Cp6Criterion::Consistent => (i(-179712), i(879552)),
    };
    let poly = cubic * m * m * m + quadratic * m * m + i(2488320) * m * n + i(262584) * m - i(362880) * n;
    Ok(BigRational::from_integer(i(147) - i(8) * c * c) + BigRational::new(poly, i(31)))
}

const RESIDUES: [(i64, i64); 4] = [(1, 1), (7, 3), (9, 5), (15, 7)];

/// The congruence and divisibility criterion for `c_1 = a`, `c_3 = c`.
pub fn cp6_criterion(x: &HomotopyCp, a: &BigInt, c: &BigInt, criterion: Cp6Criterion) -> Result<bool, HomotopyError> {
    require_dim(x, 6)?;
    if a.is_zero() {
        return Ok(false);
    }
    if criterion == Cp6Criterion::Published && !x.m().mod_floor(&BigInt::from(3)).is_zero() {
        return Ok(false);
    }
    let res = |v: &BigInt, k: i64| -> i64 {
        v.mod_floor(&BigInt::from(k)).try_into().expect("small residue")
    };
    if !RESIDUES.contains(&(res(a, 16), res(c, 8))) {
        return Ok(false);
    }
    if res(a, 3) == 0 || res(c, 3) == 0 {
        return Ok(false);
    }
    let target = cp6_divisor_target(x, c, criterion)?;
    Ok(target.is_integer() && target.to_integer().is_multiple_of(a))
}

fn window_pairs(w: SearchWindow) -> impl Iterator<Item = (BigInt, BigInt)> {
    (-w.a_max..=w.a_max)
        .filter(|a| *a != 0)
        .flat_map(move |a| (-w.c_max..=w.c_max).map(move |c| (BigInt::from(a), BigInt::from(c))))
}

/// `(a, c)` in the window passing `cp6_criterion`, sorted.
pub fn acs_criterion_cp6(
    x: &HomotopyCp,
    w: SearchWindow,
    criterion: Cp6Criterion,
) -> Result<Vec<(BigInt, BigInt)>, HomotopyError> {
    let mut out = Vec::new();
    for (a, c) in window_pairs(w) {
        if cp6_criterion(x, &a, &c, criterion)? {
            out.push((a, c));
        }
    }
    Ok(out)
}

/// Direct test of every `(a, c)` in the window, `a != 0`.
pub fn acs_scan_cp6(x: &HomotopyCp, w: SearchWindow) -> Result<Vec<AcsSolution>, HomotopyError> {
    require_dim(x, 6)?;
    let p = x.pontrjagin_closed_form()?.integers()?;
    let mut out = Vec::new();
    for (a, c) in window_pairs(w) {
        match direct(6, &p, &a, Some(&c)) {
            Ok(sol) => out.push(sol),
            Err(HomotopyError::NoCompletion { .. }) | Err(HomotopyError::Chern(_)) => {}
            Err(e) => return Err(e),
        }
    }
    sort_solutions(&mut out);
    Ok(out)
}

/// Direct solutions in the window, checked against the criterion.
pub fn acs_search_cp6(
    x: &HomotopyCp,
    w: SearchWindow,
    criterion: Cp6Criterion,
) -> Result<Vec<AcsSolution>, HomotopyError> {
    let name = criterion.name();
    let criterion: BTreeSet<(BigInt, BigInt)> = acs_criterion_cp6(x, w, criterion)?.into_iter().collect();
    let scanned = acs_scan_cp6(x, w)?;
    let direct_set: BTreeSet<(BigInt, BigInt)> = scanned
        .iter()
        .map(|s| (s.a.clone(), s.c.clone().expect("d = 6 solutions carry c")))
        .collect();
    if criterion != direct_set {
        let only_criterion: Vec<_> = criterion.difference(&direct_set).take(5).collect();
        let only_direct: Vec<_> = direct_set.difference(&criterion).take(5).collect();
        return Err(HomotopyError::CrossCheck(format!(
            "{x}: {name} criterion only {only_criterion:?}, direct only {only_direct:?}"
        )));
    }
    Ok(scanned)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn mod31_matches_published() {
        let mut published = PUBLISHED_MOD31.to_vec();
        published.sort();
        assert_eq!(mod31_table(), published);
        assert!(mod31_table().iter().all(|&(m, _)| m != 15));
        assert!(mod31_table().contains(&(16, 11)));
    }

    fn x(m: i64, n: i64, q: i64) -> HomotopyCp {
        HomotopyCp::from_ints(6, m, n, Some(q)).unwrap()
    }

    fn pairs(sols: &[AcsSolution]) -> BTreeSet<(BigInt, BigInt)> {
        sols.iter().map(|s| (s.a.clone(), s.c.clone().unwrap())).collect()
    }

    #[test]
    fn existence() {
        use Cp6Criterion::*;
        assert!(cp6_exists(&x(0, 0, 0), Published).unwrap());
        assert!(!cp6_exists(&x(16, 11, 23), Published).unwrap());
        assert!(cp6_exists(&x(48, 12, -1747), Published).unwrap());
        for t in cp6_triples(-50, 50, 40) {
            assert!(cp6_exists(&t, Consistent).unwrap(), "{t}");
        }
    }

    #[test]
    fn standard_cp6() {
        let sols = acs_search_cp6(&x(0, 0, 0), SearchWindow { a_max: 40, c_max: 40 }, Cp6Criterion::Published).unwrap();
        let p = pairs(&sols);
        assert!(p.contains(&(int(1), int(1))));
        assert!(p.contains(&(int(7), int(35))));
        for s in &sols {
            assert_eq!(s.full_chern.get(6), &int(7));
        }
    }

    #[test]
    fn targets_agree_at_m_zero() {
        for t in cp6_triples(0, 0, 100) {
            for c in [-5, 1, 7] {
                let c = int(c);
                assert_eq!(
                    cp6_divisor_target(&t, &c, Cp6Criterion::Published).unwrap(),
                    cp6_divisor_target(&t, &c, Cp6Criterion::Consistent).unwrap()
                );
            }
        }
    }

    #[test]
    fn m_not_divisible_by_three() {
        let y = x(16, 11, 23);
        let w = SearchWindow { a_max: 60, c_max: 60 };
        assert!(acs_criterion_cp6(&y, w, Cp6Criterion::Published).unwrap().is_empty());
        let direct = acs_scan_cp6(&y, w).unwrap();
        assert_eq!(direct.len(), 22);
        assert!(pairs(&direct).contains(&(int(-1), int(-1))));
        assert_eq!(acs_search_cp6(&y, w, Cp6Criterion::Consistent).unwrap(), direct);
        assert!(matches!(
            acs_search_cp6(&y, w, Cp6Criterion::Published),
            Err(HomotopyError::CrossCheck(_))
        ));
    }

    #[test]
    fn consistent_matches_direct() {
        let w = SearchWindow { a_max: 50, c_max: 50 };
        for t in cp6_triples(-96, 96, 31) {
            acs_search_cp6(&t, w, Cp6Criterion::Consistent).unwrap();
        }
    }

    #[test]
    fn triples_enumeration() {
        let t = cp6_triples(0, 0, 31);
        let ns: Vec<BigInt> = t.iter().map(|x| x.n().clone()).collect();
        assert_eq!(ns, vec![int(-31), int(0), int(31)]);
        assert!(cp6_triples(16, 16, 11).iter().any(|x| x.q() == Some(&int(23))));
    }
}
