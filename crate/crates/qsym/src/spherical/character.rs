//! Finitely supported characters `sum_beta f_beta z^beta`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::field::Field;
use crate::rootdata::WeightVec;

/// A finitely supported map from weights to scalars, read as the Laurent
/// polynomial `sum_beta f_beta z^beta`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<F> {
    rank: usize,
    terms: BTreeMap<WeightVec, F>,
}

impl<F: Field> Character<F> {
    pub fn zero(rank: usize) -> Self {
        Character { rank, terms: BTreeMap::new() }
    }

    /// `z^beta`.
    pub fn monomial(beta: WeightVec) -> Self {
        Self::term(beta, F::one())
    }

    /// `c z^beta`.
    pub fn term(beta: WeightVec, c: F) -> Self {
        let mut out = Self::zero(beta.len());
        out.add_term(beta, c);
        out
    }

    /// The unit character `z^0`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(WeightVec::zero(rank))
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (WeightVec, F)>) -> Self {
        let mut out = Self::zero(rank);
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `c z^beta`.
    pub fn add_term(&mut self, beta: WeightVec, c: F) {
        assert_eq!(beta.len(), self.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&beta) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&beta);
                }
            }
            None => {
                self.terms.insert(beta, c);
            }
        }
    }

    pub fn coeff(&self, beta: &WeightVec) -> F {
        self.terms.get(beta).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponents with nonzero coefficient, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = &WeightVec> + '_ {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVec, &F)> + '_ {
        self.terms.iter()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(b, x)| (b.clone(), x.clone() * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    /// The product in the group algebra of the weight lattice.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, x) in &self.terms {
            for (c, y) in &other.terms {
                out.add_term(b + c, x.clone() * y);
            }
        }
        out
    }

    /// Applies a map to every exponent, summing coefficients that collide.
    pub fn map_exponents(&self, f: impl Fn(&WeightVec) -> WeightVec) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&WeightVec, &F) -> G) -> Character<G> {
        Character::from_terms(self.rank, self.terms.iter().map(|(b, c)| (b.clone(), f(b, c))))
    }

    /// JSON list of `{exponent, coeff}` sorted by exponent.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(b, c)| json!({ "exponent": b, "coeff": c.to_string() }))
                .collect(),
        )
    }
}

impl<F: Field> fmt::Display for Character<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) z^{b}")?;
        }
        Ok(())
    }
}
