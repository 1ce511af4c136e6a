//! Weyl-invariant characters, orbit sums and the lattice character action.
//!
//! Characters live in the group algebra of `P(2 Sigma)`. The restricted
//! Weyl group `W` acts on exponents; `m_lambda` is the orbit sum of
//! `z^lambda` with every orbit element counted once. A character `g` of the
//! lattice `N` acts by `g . z^beta = g(beta) z^beta`, and on a family member
//! `phi_lambda` by `z^lambda g(z^-lambda phi_lambda)`.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rootdata::{InvolutionDatum, RestrictedData, WeightVec};
use crate::spherical::Character;

#[cfg(test)]
mod tests;

/// Largest Weyl orbit enumerated by [`orbit_sum`].
pub const ORBIT_CAP: usize = 100_000;

// ---------------------------------------------------------------------------
// Weyl invariance and orbit sums

fn check_p2sigma<F: Field>(phi: &Character<F>, rd: &RestrictedData) -> Result<()> {
    match phi.support().find(|w| !rd.in_p2sigma(w)) {
        Some(w) => Err(Error::Invalid(format!("exponent {w} is not in P(2 Sigma)"))),
        None => Ok(()),
    }
}

/// The image of `phi` under the `i`-th simple restricted reflection.
pub fn reflect<F: Field>(phi: &Character<F>, rd: &RestrictedData, i: usize) -> Character<F> {
    phi.map_exponents(|w| rd.reflect(i, w))
}

/// True when every simple restricted reflection fixes `phi`. Errors when
/// the support leaves `P(2 Sigma)`.
pub fn is_w_invariant<F: Field>(phi: &Character<F>, rd: &RestrictedData) -> Result<bool> {
    check_p2sigma(phi, rd)?;
    Ok((0..rd.rank()).all(|i| &reflect(phi, rd, i) == phi))
}

/// `m_lambda = sum_{mu in W lambda} z^mu`.
pub fn orbit_sum<F: Field>(lambda: &WeightVec, rd: &RestrictedData) -> Result<Character<F>> {
    let orbit = rd.weyl_orbit(lambda, ORBIT_CAP)?;
    Ok(Character::from_terms(
        lambda.len(),
        orbit.into_iter().map(|w| (w, F::one())),
    ))
}

/// The exponents of `phi` that are maximal for `<_r`; the last one in
/// lexicographic order is returned.
fn top_exponent<F: Field>(phi: &Character<F>, rd: &RestrictedData) -> Result<WeightVec> {
    let support: Vec<&WeightVec> = phi.support().collect();
    let mut best = None;
    for &b in &support {
        let mut maximal = true;
        for &c in &support {
            if c != b && rd.lt_r(b, c)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            best = Some(b.clone());
        }
    }
    best.ok_or_else(|| Error::Invalid("empty character".into()))
}

/// The coefficients `a_mu` with `phi = sum_mu a_mu m_mu`, found by
/// repeatedly removing the orbit sum of a `<_r`-maximal exponent.
///
/// Errors when `phi` is not `W`-invariant, or when an orbit sum cannot be
/// removed exactly.
pub fn expand_in_m<F: Field>(
    phi: &Character<F>,
    rd: &RestrictedData,
) -> Result<BTreeMap<WeightVec, F>> {
    if !is_w_invariant(phi, rd)? {
        return Err(Error::Invalid("character is not W-invariant".into()));
    }
    let mut rest = phi.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let mu = top_exponent(&rest, rd)?;
        let c = rest.coeff(&mu);
        let m: Character<F> = orbit_sum(&mu, rd)?;
        for w in m.support() {
            if rest.coeff(w) != c {
                return Err(Error::Invalid(format!(
                    "residual after removing m_{mu}: coefficient of z^{w} differs"
                )));
            }
        }
        rest = rest.sub(&m.scale(&c));
        out.insert(mu, c);
    }
    Ok(out)
}

/// Checks the triangular shape `phi_lambda = m_lambda + sum_{mu <_r lambda}
/// a_mu m_mu` of an expansion; returns the failures.
pub fn expansion_violations<F: Field>(
    expansion: &BTreeMap<WeightVec, F>,
    lambda: &WeightVec,
    rd: &RestrictedData,
) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    match expansion.get(lambda) {
        Some(c) if c.is_one() => {}
        _ => fails.push(format!("coefficient of m_{lambda} is not 1")),
    }
    for mu in expansion.keys() {
        if mu != lambda && !rd.lt_r(mu, lambda)? {
            fails.push(format!("m_{mu} occurs but {mu} is not <_r {lambda}"));
        }
        if !rd.in_p2sigma_dominant(mu) {
            fails.push(format!("{mu} is not dominant in P(2 Sigma)"));
        }
    }
    Ok(fails)
}

/// JSON `{lambda, coefficients: [{mu, coeff}]}` for an expansion.
pub fn expansion_json<F: Field>(lambda: &WeightVec, expansion: &BTreeMap<WeightVec, F>) -> Value {
    let coefficients: Vec<Value> = expansion
        .iter()
        .map(|(mu, c)| json!({ "mu": mu, "coeff": c.to_string() }))
        .collect();
    json!({ "lambda": lambda, "coefficients": coefficients })
}

// ---------------------------------------------------------------------------
// Lattice characters

/// A character `g` of the lattice `N`, stored by its values on the
/// generators `2 alpha~_i` (`alpha_i` outside `S`) and `alpha~_i`
/// (`alpha_i` in `S`) of `N`, in the order of the simple restricted roots.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeCharacter<F> {
    values: Vec<F>,
}

impl<F: Field> LatticeCharacter<F> {
    /// Errors when a value is zero.
    pub fn new(values: Vec<F>) -> Result<Self> {
        if values.iter().any(Zero::is_zero) {
            return Err(Error::Invalid("lattice character values must be nonzero".into()));
        }
        Ok(LatticeCharacter { values })
    }

    pub fn trivial(rank: usize) -> Self {
        LatticeCharacter { values: vec![F::one(); rank] }
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// `g(beta)` for `beta` in the lattice `N`.
    pub fn eval(&self, beta: &WeightVec, rd: &RestrictedData) -> Result<F> {
        let coords = rd
            .n_coords(beta)
            .filter(|c| c.iter().all(Rational64::is_integer))
            .ok_or_else(|| Error::Invalid(format!("{beta} is not in the lattice N")))?;
        let mut out = F::one();
        for (g, k) in self.values.iter().zip(coords) {
            out *= &g.powi(k.to_integer()).expect("values are nonzero");
        }
        Ok(out)
    }

    /// Membership in `G_theta`: `g` is trivial on `Q(2 Sigma)`.
    pub fn in_g_theta(&self, rd: &RestrictedData) -> Result<bool> {
        for gen in rd.q2sigma_generators() {
            if !self.eval(&gen, rd)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `g . phi = sum_beta g(beta) f_beta z^beta`.
    pub fn act(&self, phi: &Character<F>, rd: &RestrictedData) -> Result<Character<F>> {
        let mut out = Character::zero(phi.rank());
        for (b, c) in phi.terms() {
            out.add_term(b.clone(), self.eval(b, rd)? * c);
        }
        Ok(out)
    }

    /// `z^lambda g(z^-lambda phi_lambda) = sum_beta g(beta - lambda) f_beta
    /// z^beta`, which keeps the leading coefficient.
    pub fn act_on_family_member(
        &self,
        lambda: &WeightVec,
        phi: &Character<F>,
        rd: &RestrictedData,
    ) -> Result<Character<F>> {
        let mut out = Character::zero(phi.rank());
        for (b, c) in phi.terms() {
            out.add_term(b.clone(), self.eval(&(b - lambda), rd)? * c);
        }
        Ok(out)
    }
}

/// Every sign character of `N` that is trivial on `Q(2 Sigma)`: the group
/// `G_theta`, of order `2^|S|`.
pub fn g_theta<F: Field>(rd: &RestrictedData) -> Result<Vec<LatticeCharacter<F>>> {
    let k = rd.rank();
    let mut out = Vec::new();
    for mask in 0u64..(1 << k) {
        let values = (0..k)
            .map(|i| if mask >> i & 1 == 1 { -F::one() } else { F::one() })
            .collect();
        let g = LatticeCharacter { values };
        if g.in_g_theta(rd)? {
            out.push(g);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Lattices

/// Generators of `N`, a basis of `Q(2 Sigma)`, and the invariant factors
/// of `N / Q(2 Sigma)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeQuotient {
    pub n_basis: Vec<WeightVec>,
    pub q2sigma_basis: Vec<WeightVec>,
    pub invariant_factors: Vec<i64>,
}

/// Computes [`LatticeQuotient`] by a Smith normal form and checks that the
/// quotient is `(Z/2)^|S|`.
pub fn lattice_n_and_quotient(inv: &InvolutionDatum) -> Result<LatticeQuotient> {
    let rd = RestrictedData::new(inv)?;
    let q2sigma_basis = rd
        .simple_roots()
        .iter()
        .map(|a| a.scale(Rational64::from_integer(2)))
        .collect();
    let invariant_factors = rd.n_mod_q2sigma();
    if invariant_factors != vec![2; inv.s_set().len()] {
        return Err(Error::TheoremViolation(format!(
            "N / Q(2 Sigma) has invariant factors {invariant_factors:?} for {}",
            inv.name()
        )));
    }
    Ok(LatticeQuotient {
        n_basis: rd.n_generators(),
        q2sigma_basis,
        invariant_factors,
    })
}
