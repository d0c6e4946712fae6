use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MathError;

/// All positive and negative divisors of `n`, in ascending order.
pub fn divisors_signed(n: &BigInt) -> Result<Vec<BigInt>, MathError> {
    if n.is_zero() {
        return Err(MathError::ZeroArgument);
    }
    let abs = n.abs();
    let positive: Vec<BigInt> = match abs.to_u64() {
        Some(small) => small_divisors(small).into_iter().map(BigInt::from).collect(),
        None => big_divisors(&abs),
    };
    let mut all: Vec<BigInt> = positive.iter().rev().map(|d| -d).collect();
    all.extend(positive);
    Ok(all)
}

fn small_divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

fn big_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        let (q, r) = n.div_rem(&d);
        if r.is_zero() {
            if q != d {
                high.push(q);
            }
            low.push(d.clone());
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Elementary symmetric polynomial `e_q(values)`; `e_0 = 1`.
pub fn elem_sym(values: &[BigInt], q: usize) -> Result<BigInt, MathError> {
    if q > values.len() {
        return Err(MathError::IndexOutOfRange {
            index: q,
            max: values.len(),
        });
    }
    // e[j] holds e_j of the values consumed so far
    let mut e = vec![BigInt::zero(); q + 1];
    e[0] = BigInt::one();
    for (seen, x) in values.iter().enumerate() {
        for j in (1..=q.min(seen + 1)).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn trial_division(n: i64) -> Vec<i64> {
        let a = n.abs();
        let mut out: Vec<i64> = (1..=a).filter(|d| a % d == 0).flat_map(|d| [d, -d]).collect();
        out.sort();
        out
    }

    #[test]
    fn divisors_of_25() {
        assert_eq!(
            divisors_signed(&int(25)).unwrap(),
            ints(&[-25, -5, -1, 1, 5, 25])
        );
    }

    #[test]
    fn divisors_of_9529_match_trial_division() {
        let expected = trial_division(9529);
        assert_eq!(expected, vec![-9529, -733, -13, -1, 1, 13, 733, 9529]);
        assert_eq!(divisors_signed(&int(9529)).unwrap(), ints(&expected));
    }

    #[test]
    fn divisors_of_negative_and_square() {
        assert_eq!(divisors_signed(&int(-36)).unwrap(), ints(&trial_division(36)));
        assert_eq!(divisors_signed(&int(1)).unwrap(), ints(&[-1, 1]));
    }

    #[test]
    fn big_path_agrees_with_small_path() {
        for n in [1u64, 2, 12, 360, 9529, 97 * 97] {
            let small: Vec<BigInt> = small_divisors(n).into_iter().map(BigInt::from).collect();
            assert_eq!(big_divisors(&BigInt::from(n)), small);
        }
    }

    #[test]
    fn zero_has_no_divisor_list() {
        assert_eq!(divisors_signed(&int(0)), Err(MathError::ZeroArgument));
    }

    #[test]
    fn elementary_symmetric() {
        let v = ints(&[1, 2, 3]);
        assert_eq!(elem_sym(&v, 0).unwrap(), int(1));
        assert_eq!(elem_sym(&v, 1).unwrap(), int(6));
        assert_eq!(elem_sym(&v, 2).unwrap(), int(11));
        assert_eq!(elem_sym(&v, 3).unwrap(), int(6));
        assert_eq!(
            elem_sym(&v, 4),
            Err(MathError::IndexOutOfRange { index: 4, max: 3 })
        );
        assert_eq!(elem_sym(&[], 0).unwrap(), int(1));
    }
}
