use std::sync::OnceLock;

use num_traits::Zero;

use super::koclass::KOClass;
use super::{check_ko_dim, KClass, KTheoryError};

static TABLES: [OnceLock<Vec<KOClass>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];

/// Finds `y` with `c(y) = v`, using only `w^0 ..= w^{d/2}`. `c(w)^j` starts
/// with `L^{2j}` so the system is unitriangular; torsion is invisible here.
pub(crate) fn complex_preimage(v: &KClass) -> Result<KOClass, KTheoryError> {
    let d = v.dim();
    let c_omega = KOClass::omega(d)?.complexify();
    let mut rest = v.clone();
    let mut power = KClass::one(d);
    let mut y = Vec::new();
    for j in 0..=d / 2 {
        let coeff = rest.coeff(2 * j).clone();
        rest = &rest - &power.scale(&coeff);
        y.push(coeff);
        power = &power * &c_omega;
    }
    if !rest.is_zero() {
        return Err(KTheoryError::NotInImage);
    }
    Ok(KOClass::from_series(d, y))
}

fn build_table(d: usize) -> Vec<KOClass> {
    if d == 5 {
        let rows: [[i64; 4]; 6] = [
            [2, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 2, 1, 0],
            [0, 0, 3, 1],
            [0, 0, 2, 0],
            [0, 0, 0, 1],
        ];
        return rows
            .iter()
            .map(|r| KOClass::from_ints(5, r).expect("valid d = 5 class"))
            .collect();
    }
    (0..=d)
        .map(|i| {
            let x = KClass::l_pow(d, i);
            complex_preimage(&(&x + &x.conjugate())).expect("self-conjugate classes lie in the image of c")
        })
        .collect()
}

/// `r(L^i)` for `i = 0..=d`.
pub fn real_reduction_table(d: usize) -> Result<&'static [KOClass], KTheoryError> {
    check_ko_dim(d)?;
    Ok(TABLES[d - 4].get_or_init(|| build_table(d)))
}

/// Real reduction `r: K(CP^d) -> KO(CP^d)`, extended additively from the
/// generator table.
pub fn real_reduce(x: &KClass) -> Result<KOClass, KTheoryError> {
    let table = real_reduction_table(x.dim())?;
    let mut acc = KOClass::zero(x.dim())?;
    for (c, r) in x.coeffs().iter().zip(table) {
        if !c.is_zero() {
            acc = &acc + &r.scale(c);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ko(d: usize, c: &[i64]) -> KOClass {
        KOClass::from_ints(d, c).unwrap()
    }

    #[test]
    fn generator_values() {
        let t = real_reduction_table(5).unwrap();
        assert_eq!(t[0], ko(5, &[2, 0, 0, 0]));
        assert_eq!(t[2], ko(5, &[0, 2, 1, 0]));
        assert_eq!(t[5], ko(5, &[0, 0, 0, 1]));
        assert_eq!(real_reduce(&KClass::one(4)).unwrap(), ko(4, &[2, 0, 0]));
        assert_eq!(real_reduce(&KClass::one(3)), Err(KTheoryError::UnsupportedDimension(3)));
    }

    #[test]
    fn torsion_free_tables() {
        let t4 = real_reduction_table(4).unwrap();
        assert_eq!(t4[2], ko(4, &[0, 2, 1]));
        assert_eq!(t4[3], ko(4, &[0, 0, 3]));
        assert_eq!(t4[4], ko(4, &[0, 0, 2]));
        let t6 = real_reduction_table(6).unwrap();
        assert_eq!(t6[1], ko(6, &[0, 1, 0, 0]));
        assert_eq!(t6[6], ko(6, &[0, 0, 0, 2]));
    }

    #[test]
    fn d5_table_matches_solver_modulo_torsion() {
        for (i, r) in real_reduction_table(5).unwrap().iter().enumerate() {
            let x = KClass::l_pow(5, i);
            let solved = complex_preimage(&(&x + &x.conjugate())).unwrap();
            assert_eq!(&r.coeffs()[..3], &solved.coeffs()[..3], "L^{i}");
        }
    }

    #[test]
    fn c_after_r_is_one_plus_t() {
        for d in [4, 5, 6] {
            for i in 0..=d {
                let x = KClass::l_pow(d, i);
                assert_eq!(real_reduce(&x).unwrap().complexify(), &x + &x.conjugate(), "d={d} i={i}");
            }
        }
    }

    #[test]
    fn r_after_c_is_two() {
        for d in [4, 5, 6] {
            for j in 0..4 {
                let y = KOClass::omega_pow(d, j).unwrap();
                assert_eq!(real_reduce(&y.complexify()).unwrap(), y.scale(&BigInt::from(2)), "d={d} j={j}");
            }
        }
    }

    #[test]
    fn kernel_generators() {
        let h = |j| KClass::h_pow(5, j);
        let mu1 = &h(1) - &h(-1);
        let mu2 = &h(2) - &h(-2);
        assert_eq!(mu1, KClass::from_ints(5, &[0, 2, -1, 1, -1, 1]));
        assert!(real_reduce(&mu1).unwrap().is_zero());
        assert!(real_reduce(&mu2).unwrap().is_zero());
        assert!(real_reduce(&KClass::from_ints(5, &[0, 0, 0, 0, 0, 2])).unwrap().is_zero());
    }

    #[test]
    fn surjective_on_generators() {
        assert_eq!(real_reduce(&KClass::l(5)).unwrap(), ko(5, &[0, 1, 0, 0]));
        assert_eq!(real_reduce(&KClass::from_ints(5, &[0, -2, 1])).unwrap(), ko(5, &[0, 0, 1, 0]));
        assert_eq!(real_reduce(&KClass::l_pow(5, 5)).unwrap(), ko(5, &[0, 0, 0, 1]));
    }

    fn arb_pair() -> impl Strategy<Value = (KOClass, KClass)> {
        prop::sample::select(vec![4usize, 5, 6]).prop_flat_map(|d| {
            let n = if d == 4 { 3 } else { 4 };
            (
                prop::collection::vec(-5i64..6, n).prop_map(move |v| ko(d, &v)),
                prop::collection::vec(-5i64..6, d + 1).prop_map(move |v| KClass::from_ints(d, &v)),
            )
        })
    }

    proptest! {
        #[test]
        fn r_is_ko_linear((y, x) in arb_pair()) {
            let lhs = real_reduce(&(&y.complexify() * &x)).unwrap();
            prop_assert_eq!(lhs, &y * &real_reduce(&x).unwrap());
        }

        #[test]
        fn r_is_additive((_y, x) in arb_pair(), k in -5i64..6) {
            let x2 = x.scale(&BigInt::from(k));
            prop_assert_eq!(
                real_reduce(&(&x + &x2)).unwrap(),
                &real_reduce(&x).unwrap() + &real_reduce(&x2).unwrap()
            );
        }
    }
}
