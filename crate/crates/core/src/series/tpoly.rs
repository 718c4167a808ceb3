use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Coefficient;
use crate::combinat::factorial;

/// A polynomial in the umbral indeterminate `t` with rational coefficients.
///
/// Stored densely by power of `t`, with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TPoly {
    coeffs: Vec<BigRational>,
}

impl TPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// `c * t^power`.
    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at an integer `t`.
    pub fn eval(&self, t: &BigInt) -> BigRational {
        let t = BigRational::from_integer(t.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }
}

/// The umbral functional: `t^m` maps to `m!`, extended linearly.
pub fn phi(p: &TPoly) -> BigRational {
    p.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| c * BigRational::from_integer(factorial(m as u64).into()))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        TPoly::from_coeffs(long)
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        self + (-rhs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return TPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        TPoly::from_coeffs(vec![BigRational::one()])
    }
}

impl Coefficient for TPoly {
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(TPoly::from_coeffs(vec![c.recip()])),
            _ => None,
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (m, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match m {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&TPoly::monomial(q(1, 1), 2)), q(2, 1));
        let p = TPoly::monomial(q(1, 2), 2) - TPoly::monomial(q(1, 1), 3);
        assert_eq!(phi(&p), q(-5, 1));
        assert_eq!(phi(&TPoly::one()), q(1, 1));
        assert_eq!(phi(&TPoly::zero()), q(0, 1));
    }

    #[test]
    fn arithmetic() {
        let t = TPoly::t();
        let p = (TPoly::one() + t.clone()) * (TPoly::one() - t.clone());
        assert_eq!(p, TPoly::one() - t.clone() * t);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "1 - t^2");
        assert_eq!(TPoly::monomial(q(1, 2), 2).to_string(), "1/2*t^2");
        assert_eq!(p.eval(&BigInt::from(3)), q(-8, 1));
    }
}
