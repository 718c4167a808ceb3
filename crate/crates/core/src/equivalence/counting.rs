use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::orbit::{classes_of_sn, Relation};
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{is_salient_unchecked, permutations};
use crate::series::TruncatedSeries;

/// Number of classes of `S_n`, counted as the number of salient permutations.
pub fn count_classes_brute(n: usize, limits: &Limits) -> Result<BigUint> {
    if n > limits.brute_n {
        return Err(Error::guard(
            "n for brute-force counting",
            limits.brute_n,
            n,
        ));
    }
    let count = permutations(n)
        .filter(|p| is_salient_unchecked(p.letters()))
        .count();
    Ok(BigUint::from(count))
}

/// Number of classes of `S_n` under `relation`, counted by breadth-first orbits.
pub fn count_orbits(n: usize, relation: Relation, limits: &Limits) -> Result<BigUint> {
    Ok(BigUint::from(classes_of_sn(n, relation, limits)?.len()))
}

/// `sum_{j=0}^{n/2} (-1)^j (n-j)! C(n-j, j)`.
pub fn f_inclusion_exclusion(n: usize) -> BigUint {
    let n = n as u64;
    let total = (0..=n / 2).fold(BigInt::zero(), |acc, j| {
        let term = BigInt::from(factorial(n - j) * binomial(n - j, j));
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    total.to_biguint().expect("class count is positive")
}

fn factorial_power_sum(base: &TruncatedSeries<BigInt>, order: usize) -> TruncatedSeries<BigInt> {
    let mut sum = base.zero_like();
    let mut power = base.one_like();
    for m in 0..=order {
        sum = sum.add(&power.scale(&BigInt::from(factorial(m as u64))));
        power = power.mul(base);
    }
    sum
}

fn to_naturals(s: &TruncatedSeries<BigInt>) -> Result<Vec<BigUint>> {
    s.to_vec()
        .into_iter()
        .map(|c| {
            c.to_biguint()
                .ok_or_else(|| Error::Inconsistent(format!("negative coefficient {c}")))
        })
        .collect()
}

/// Coefficients of `sum_m m! (x(1-x))^m` through `x^order`.
pub fn f_series(order: usize) -> Vec<BigUint> {
    let cap = order as u32;
    let base = TruncatedSeries::univariate("x", cap, [0, 1, -1].map(BigInt::from));
    to_naturals(&factorial_power_sum(&base, order)).expect("coefficients are class counts")
}

/// Number of permutations of `[n]` whose neighbours all differ by at least two,
/// i.e. the one-element classes.
pub fn count_singletons(n: usize, limits: &Limits) -> Result<BigUint> {
    if n > limits.singleton_n {
        return Err(Error::guard(
            "n for singleton counting",
            limits.singleton_n,
            n,
        ));
    }
    fn extend(last: Option<u32>, used: &mut [bool], depth: usize) -> u64 {
        if depth == used.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..used.len() {
            let value = v as u32 + 1;
            if used[v] || last.is_some_and(|l| l.abs_diff(value) < 2) {
                continue;
            }
            used[v] = true;
            total += extend(Some(value), used, depth + 1);
            used[v] = false;
        }
        total
    }
    Ok(BigUint::from(extend(None, &mut vec![false; n], 0)))
}

/// Coefficients of `sum_m m! (x(1-x)/(1+x))^m` through `x^order`.
pub fn singleton_series(order: usize) -> Vec<BigUint> {
    let cap = order as u32;
    let num = TruncatedSeries::univariate("x", cap, [0, 1, -1].map(BigInt::from));
    let den = TruncatedSeries::univariate("x", cap, [1, 1].map(BigInt::from));
    let base = num.div(&den).expect("1 + x is invertible");
    to_naturals(&factorial_power_sum(&base, order)).expect("coefficients are class counts")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Formula,
    Brute,
}

/// `n!` for `n <= j`, otherwise `j! j^(n-j)`.
pub fn f_j_formula(n: usize, j: u32) -> BigUint {
    let (n, j) = (n as u64, j as u64);
    if n <= j {
        factorial(n)
    } else {
        factorial(j) * BigUint::from(j).pow((n - j) as u32)
    }
}

/// Classes of `S_n` under swaps of neighbours differing by at least `j`.
pub fn f_j_count(n: usize, j: u32, method: CountMethod, limits: &Limits) -> Result<BigUint> {
    if j < 2 {
        return Err(Error::InvalidArgument(format!(
            "j must be at least 2, got {j}"
        )));
    }
    match method {
        CountMethod::Formula => Ok(f_j_formula(n, j)),
        CountMethod::Brute => count_orbits(n, Relation::AtLeast(j), limits),
    }
}

/// `n = 0` has one (empty) class.
pub fn f_sequence_formula(upto: usize) -> Vec<BigUint> {
    (0..=upto).map(f_inclusion_exclusion).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn nat(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn brute_examples() {
        let l = Limits::default();
        assert_eq!(count_classes_brute(4, &l).unwrap(), BigUint::from(8u32));
        assert_eq!(count_classes_brute(0, &l).unwrap(), BigUint::one());
        assert_eq!(count_classes_brute(7, &l).unwrap(), BigUint::from(1824u32));
        assert!(count_classes_brute(9, &l).unwrap_err().is_guard());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(f_inclusion_exclusion(4), BigUint::from(8u32));
        assert_eq!(f_inclusion_exclusion(5), BigUint::from(42u32));
        assert_eq!(f_inclusion_exclusion(1), BigUint::one());
        assert_eq!(f_series(8), nat(&[1, 1, 1, 2, 8, 42, 258, 1824, 14664]));
        assert_eq!(f_series(0), nat(&[1]));
        assert_eq!(f_series(3), nat(&[1, 1, 1, 2]));
    }

    #[test]
    fn singleton_examples() {
        let l = Limits::default();
        assert_eq!(count_singletons(4, &l).unwrap(), BigUint::from(2u32));
        assert_eq!(count_singletons(2, &l).unwrap(), BigUint::zero());
        assert_eq!(count_singletons(6, &l).unwrap(), BigUint::from(90u32));
        assert_eq!(
            singleton_series(8),
            nat(&[1, 1, 0, 0, 2, 14, 90, 646, 5242])
        );
        assert_eq!(singleton_series(1), nat(&[1, 1]));
        let brute: Vec<BigUint> = (0..=4).map(|n| count_singletons(n, &l).unwrap()).collect();
        assert_eq!(singleton_series(4), brute);
    }

    #[test]
    fn f_j_examples() {
        let l = Limits::default();
        assert_eq!(
            f_j_count(3, 2, CountMethod::Brute, &l).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            f_j_count(3, 2, CountMethod::Formula, &l).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            f_j_count(2, 3, CountMethod::Formula, &l).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            f_j_count(5, 3, CountMethod::Formula, &l).unwrap(),
            BigUint::from(54u32)
        );
        assert!(f_j_count(3, 1, CountMethod::Formula, &l).is_err());
    }
}
