//! Exact factorials, binomials and Fibonacci numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Falling factorial `y (y-1) ... (y-r+1)`; `y` may be negative.
pub fn falling(y: &BigInt, r: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut cur = y.clone();
    for _ in 0..r {
        acc *= &cur;
        cur -= 1;
    }
    acc
}

/// Fibonacci numbers with `F(1) = F(2) = 1` and `F(0) = 0`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        let fib: Vec<u64> = (0..10).map(|n| fibonacci(n).try_into().unwrap()).collect();
        assert_eq!(fib, vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(falling(&BigInt::from(5), 3), BigInt::from(60));
        assert_eq!(falling(&BigInt::from(-1), 0), BigInt::one());
        assert_eq!(falling(&BigInt::from(2), 3), BigInt::zero());
    }
}
