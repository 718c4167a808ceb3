//! Generating functions of partially commutative monoids.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::TruncatedSeries;
use crate::combinat::{binomial, factorial, falling};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::MultisetSpec;

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `sum_S (-1)^{|S|} prod_{i in S} x_i` over subsets `S` of pairwise commuting
/// generators. `commute(i, j)` is queried for `0 <= i < j < n`.
pub fn clique_polynomial(
    n: usize,
    caps: &[u32],
    commute: impl Fn(usize, usize) -> bool,
) -> TruncatedSeries<BigInt> {
    assert_eq!(caps.len(), n);
    let names = var_names(n);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut poly = TruncatedSeries::zero(&names, caps);
    // Depth-first over cliques in increasing index order.
    fn grow(
        start: usize,
        n: usize,
        clique: &mut Vec<usize>,
        commute: &dyn Fn(usize, usize) -> bool,
        poly: &mut TruncatedSeries<BigInt>,
    ) {
        let mut e = vec![0u32; n];
        for &i in clique.iter() {
            e[i] = 1;
        }
        let sign = if clique.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        poly.add_term(e, BigInt::from(sign));
        for next in start..n {
            if clique.iter().all(|&i| commute(i, next)) {
                clique.push(next);
                grow(next + 1, n, clique, commute, poly);
                clique.pop();
            }
        }
    }
    grow(0, n, &mut Vec::new(), &commute, &mut poly);
    poly
}

/// Truncated generating function of the monoid on `n` generators with the
/// given commutations: the reciprocal of [`clique_polynomial`].
pub fn cartier_foata_series(
    n: usize,
    caps: &[u32],
    commute: impl Fn(usize, usize) -> bool,
) -> TruncatedSeries<BigInt> {
    clique_polynomial(n, caps, commute)
        .inverse()
        .expect("clique polynomial has constant term 1")
}

/// `1 / (1 - sum x_i + sum x_i x_{i+1})`: neighbouring generators commute.
pub fn cf_series(n: usize, caps: &[u32]) -> Result<TruncatedSeries<BigInt>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if caps.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} caps, got {}",
            caps.len()
        )));
    }
    Ok(cartier_foata_series(n, caps, |i, j| j == i + 1))
}

/// Number of classes of words with content `spec`, read off the series.
pub fn multiset_count_cf(spec: &MultisetSpec, limits: &Limits) -> Result<BigUint> {
    let total = spec.total();
    if total > limits.cf_total {
        return Err(Error::guard("multiset size", limits.cf_total, total));
    }
    let rs = spec.multiplicities();
    if rs.is_empty() {
        return Ok(BigUint::one());
    }
    let caps: Vec<u32> = rs.iter().map(|&r| r as u32).collect();
    let series = cf_series(rs.len(), &caps)?;
    series
        .coefficient(&caps)
        .to_biguint()
        .ok_or_else(|| Error::Inconsistent("negative class count".into()))
}

/// Closed form for the coefficient of `x1^h x2^i x3^j x4^k` in the four-variable series.
pub fn f4_coefficient(h: u64, i: u64, j: u64, k: u64) -> BigUint {
    binomial(h + j, j) * binomial(h + k, k) * binomial(i + k, i)
}

/// Closed form for the same coefficient in the `t`-th power of the series.
pub fn f4_t_coefficient(h: u64, i: u64, j: u64, k: u64, t: u64) -> BigRational {
    let t = BigInt::from(t);
    let ff = |base: u64, r: u64| falling(&(&t + BigInt::from(base) - 1), r);
    let num = ff(h + j, j) * ff(h + k, h) * ff(i + k, i + k);
    let den: BigUint = factorial(h) * factorial(i) * factorial(j) * factorial(k);
    BigRational::new(num, den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn cf_examples() {
        let s = cf_series(3, &[1, 1, 1]).unwrap();
        assert_eq!(s.coefficient(&[1, 1, 1]), BigInt::from(2));
        let s = cf_series(1, &[6]).unwrap();
        assert!((0..=6).all(|r| s.coefficient(&[r]) == BigInt::one()));
        let s = cf_series(5, &[1; 5]).unwrap();
        assert_eq!(s.coefficient(&[1; 5]), BigInt::from(42));
    }

    #[test]
    fn multiset_examples() {
        let l = Limits::default();
        let count = |s: &str| multiset_count_cf(&s.parse().unwrap(), &l).unwrap();
        assert_eq!(count("1:2,2:1,3:2"), BigUint::from(6u32));
        assert_eq!(count("1:7"), BigUint::one());
        assert_eq!(count("1:2,2:2,3:2"), BigUint::from(6u32));
        assert_eq!(count(""), BigUint::one());
        assert!(multiset_count_cf(&"1:25".parse().unwrap(), &l)
            .unwrap_err()
            .is_guard());
    }

    #[test]
    fn f4_examples() {
        assert_eq!(f4_coefficient(1, 1, 1, 1), BigUint::from(8u32));
        assert_eq!(f4_coefficient(0, 0, 0, 0), BigUint::one());
        assert_eq!(f4_coefficient(2, 1, 0, 2), BigUint::from(18u32));
        assert_eq!(f4_coefficient(2, 2, 2, 0), BigUint::from(6u32));
        let one = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(f4_t_coefficient(1, 1, 1, 1, 1), one(8));
        assert_eq!(f4_t_coefficient(0, 1, 0, 0, 0), one(0));
        assert_eq!(f4_t_coefficient(0, 0, 0, 0, 0), one(1));
        assert_eq!(f4_t_coefficient(1, 0, 0, 0, 2), one(2));
    }

    #[test]
    fn clique_polynomial_of_path() {
        let p = clique_polynomial(3, &[1, 1, 1], |i, j| j == i + 1);
        // 1 - x1 - x2 - x3 + x1x2 + x2x3
        assert_eq!(p.len(), 6);
        assert_eq!(p.coefficient(&[1, 1, 0]), BigInt::one());
        assert_eq!(p.coefficient(&[1, 0, 1]), BigInt::zero());
    }
}
