use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Ring elements usable as series coefficients.
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Multiplicative inverse, when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn try_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coefficient for BigRational {
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}
