//! The scalar abstraction used by the linear algebra and representation
//! layers.
//!
//! Everything above `qfield` is generic over [`Field`]. The exact symbolic
//! instantiation is [`crate::Scalar`]; [`num_rational::BigRational`] is the
//! instantiation used after specializing every symbol to a rational value.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Embedding of the rationals.
    fn from_rational(r: &BigRational) -> Self;

    /// `self / other`, `None` when `other` is zero.
    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * &i)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Integer power; negative exponents invert (`None` for zero base).
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc *= &b;
            }
            n >>= 1;
            if n > 0 {
                b = b.clone() * &b;
            }
        }
        Some(acc)
    }

    /// A size measure used to prefer small pivots during elimination.
    fn size_hint(&self) -> usize {
        1
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Fields whose elements can be evaluated at a rational point, used to
/// probe ranks cheaply before an exact symbolic solve.
pub trait Specialize: Field {
    /// The value at the point `value` (every symbol must be assigned).
    fn specialize(&self, value: &dyn Fn(crate::qfield::Symbol) -> Option<BigRational>) -> crate::Result<BigRational>;
}

impl Specialize for BigRational {
    fn specialize(&self, _: &dyn Fn(crate::qfield::Symbol) -> Option<BigRational>) -> crate::Result<BigRational> {
        Ok(self.clone())
    }
}

impl Specialize for crate::qfield::RatFunc {
    fn specialize(&self, value: &dyn Fn(crate::qfield::Symbol) -> Option<BigRational>) -> crate::Result<BigRational> {
        self.eval(value)
    }
}
