//! Rational weight vectors in simple-root coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A vector of `h*` written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(Vec<Rational64>);

impl WeightVec {
    pub fn new(coords: Vec<Rational64>) -> Self {
        WeightVec(coords)
    }

    pub fn zero(n: usize) -> Self {
        WeightVec(vec![Rational64::zero(); n])
    }

    /// The simple root `alpha_i` (0-based) in rank `n`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i] = Rational64::from_integer(1);
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVec(coords.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, when all coordinates are integers.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn to_big(&self) -> Vec<BigRational> {
        self.0.iter().map(|c| to_big(*c)).collect()
    }

    pub fn scale(&self, c: Rational64) -> Self {
        WeightVec(self.0.iter().map(|x| x * c).collect())
    }

    /// True when every coordinate is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub(crate) fn check_rank(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: n,
                got: self.len(),
            })
        }
    }

    /// Parses `"1,0,-1/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVec)
    }
}

pub(crate) fn to_big(c: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*c.numer()), BigInt::from(*c.denom()))
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "rank mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&WeightVec> for Rational64 {
    type Output = WeightVec;
    fn mul(self, rhs: &WeightVec) -> WeightVec {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_parsing() {
        let a = WeightVec::parse("1, 1/2").unwrap();
        let b = WeightVec::from_ints(&[1, 0]);
        assert_eq!(&(&a - &b) + &b, a);
        assert!(!a.is_integral());
        assert_eq!(a.scale(Rational64::from_integer(2)).to_ints(), Some(vec![2, 1]));
        assert_eq!(a.to_string(), "(1, 1/2)");
        assert!(WeightVec::parse("x").is_err());
    }
}
