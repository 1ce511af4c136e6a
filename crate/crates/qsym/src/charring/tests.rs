use num_rational::Rational64;
use num_traits::{One, Zero};

use super::*;
use crate::qfield::RatFunc;
use crate::qsp::PairSpec;
use crate::rootdata::{table, PairType};
use crate::spherical::zonal;
use crate::uqrep::DEFAULT_DIM_CAP;
use crate::Scalar;

fn inv(pair: PairType, n: usize) -> InvolutionDatum {
    InvolutionDatum::new(pair, n, None).unwrap()
}

fn rd(pair: PairType, n: usize) -> RestrictedData {
    RestrictedData::new(&inv(pair, n)).unwrap()
}

fn p(s: &str) -> Scalar {
    RatFunc::parse(s).unwrap()
}

fn zonal_of(d: &InvolutionDatum, lambda: &WeightVec) -> Character<Scalar> {
    zonal(
        lambda,
        &PairSpec::symbolic(d).unwrap(),
        &PairSpec::partner_symbolic(d).unwrap(),
        Scalar::v(),
        DEFAULT_DIM_CAP,
    )
    .unwrap()
    .character
}

// ---------------------------------------------------------------------------
// Invariance and orbit sums

#[test]
fn rank_one_invariance() {
    let r = rd(PairType::CI, 1);
    let beta = r.simple_roots()[0].clone();
    let sym: Character<Scalar> = Character::monomial(beta.clone()).add(&Character::monomial(-&beta));
    assert!(is_w_invariant(&sym, &r).unwrap());
    assert!(!is_w_invariant(&Character::<Scalar>::monomial(beta.clone()), &r).unwrap());
    let half = beta.scale(Rational64::new(1, 4));
    assert!(is_w_invariant(&Character::<Scalar>::monomial(half), &r).is_err());
}

#[test]
fn orbit_sums() {
    let r = rd(PairType::CI, 1);
    let zero = WeightVec::zero(1);
    assert_eq!(orbit_sum::<Scalar>(&zero, &r).unwrap(), Character::one(1));
    let two = r.simple_roots()[0].scale(Rational64::from_integer(2));
    let m: Character<Scalar> = orbit_sum(&two, &r).unwrap();
    assert_eq!(m, Character::monomial(two.clone()).add(&Character::monomial(-&two)));
    // A regular weight: z^lambda and z^{s_i lambda} both occur.
    let a2 = rd(PairType::AI, 2);
    let lambda = a2.delta().scale(Rational64::from_integer(2));
    let m: Character<Scalar> = orbit_sum(&lambda, &a2).unwrap();
    assert_eq!(m.len(), 6);
    for i in 0..2 {
        assert!(m.coeff(&a2.reflect(i, &lambda)).is_one());
    }
    assert!(is_w_invariant(&m, &a2).unwrap());
}

#[test]
fn expansion_of_orbit_sums_and_combinations() {
    let r = rd(PairType::AI, 2);
    let a = r.simple_roots()[0].scale(Rational64::from_integer(4));
    let b = r.simple_roots()[1].scale(Rational64::from_integer(4));
    let lambda = &a + &b;
    let m: Character<Scalar> = orbit_sum(&lambda, &r).unwrap();
    assert_eq!(expand_in_m(&m, &r).unwrap(), BTreeMap::from([(lambda.clone(), Scalar::one())]));
    // Two incomparable dominant weights with different coefficients.
    let w1 = WeightVec::new(vec![Rational64::new(8, 3), Rational64::new(4, 3)]);
    let w2 = WeightVec::new(vec![Rational64::new(4, 3), Rational64::new(8, 3)]);
    assert!(!r.leq_r(&w1, &w2).unwrap() && !r.leq_r(&w2, &w1).unwrap());
    let phi = orbit_sum::<Scalar>(&w1, &r)
        .unwrap()
        .scale(&p("v"))
        .add(&orbit_sum::<Scalar>(&w2, &r).unwrap().scale(&p("3")))
        .add(&Character::one(2).scale(&p("s1")));
    let e = expand_in_m(&phi, &r).unwrap();
    assert_eq!(
        e,
        BTreeMap::from([(w1, p("v")), (w2, p("3")), (WeightVec::zero(2), p("s1"))])
    );
    let bad = phi.add(&Character::monomial(lambda));
    assert!(expand_in_m(&bad, &r).is_err());
}

#[test]
fn expansion_shape_check() {
    let r = rd(PairType::CI, 1);
    let lambda = r.simple_roots()[0].clone();
    let good = BTreeMap::from([(lambda.clone(), p("1")), (WeightVec::zero(1), p("s1"))]);
    assert!(expansion_violations(&good, &lambda, &r).unwrap().is_empty());
    let bad = BTreeMap::from([(lambda.clone(), p("2"))]);
    assert_eq!(expansion_violations(&bad, &lambda, &r).unwrap().len(), 1);
    let json = expansion_json(&lambda, &good);
    assert_eq!(json["coefficients"][1]["coeff"], "1");
}

#[test]
fn rank_one_zonal_expansion() {
    let d = inv(PairType::CI, 1);
    let r = RestrictedData::new(&d).unwrap();
    let lambda = d.root().from_fundamental(&[2]).unwrap();
    let e = expand_in_m(&zonal_of(&d, &lambda), &r).unwrap();
    assert_eq!(
        e,
        BTreeMap::from([
            (lambda, p("1")),
            (WeightVec::zero(1), p("s1*sp1*(v^4-1)^2/(v^4+1)")),
        ])
    );
}

// ---------------------------------------------------------------------------
// Lattice characters

#[test]
fn trivial_character_is_identity() {
    let d = inv(PairType::CI, 2);
    let r = RestrictedData::new(&d).unwrap();
    let lambda = d.root().from_fundamental(&[2, 2]).unwrap();
    let phi = zonal_of(&d, &lambda);
    let g = LatticeCharacter::<Scalar>::trivial(r.rank());
    assert_eq!(g.act(&phi, &r).unwrap(), phi);
    assert_eq!(g.act_on_family_member(&lambda, &phi, &r).unwrap(), phi);
}

#[test]
fn rank_one_sign_flip() {
    let d = inv(PairType::CI, 1);
    let r = RestrictedData::new(&d).unwrap();
    let lambda = d.root().from_fundamental(&[2]).unwrap();
    let phi = zonal_of(&d, &lambda);
    let g = LatticeCharacter::new(vec![-Scalar::one()]).unwrap();
    assert!(g.in_g_theta(&r).unwrap());
    let out = g.act_on_family_member(&lambda, &phi, &r).unwrap();
    let zero = WeightVec::zero(1);
    assert_eq!(out.coeff(&zero), -phi.coeff(&zero));
    assert_eq!(out.coeff(&lambda), Scalar::one());
    assert_eq!(out.coeff(&-&lambda), Scalar::one());
    assert!(is_w_invariant(&out, &r).unwrap());
}

#[test]
fn characters_outside_g_theta_break_invariance() {
    let d = inv(PairType::CI, 2);
    let r = RestrictedData::new(&d).unwrap();
    // g(2 alpha~_i) = 4 != 1 on the S generator.
    let g = LatticeCharacter::new(vec![Scalar::one(), Scalar::from_int(2)]).unwrap();
    assert!(!g.in_g_theta(&r).unwrap());
    let m: Character<Scalar> = orbit_sum(&r.delta().scale(Rational64::from_integer(2)), &r).unwrap();
    assert!(!is_w_invariant(&g.act(&m, &r).unwrap(), &r).unwrap());
    assert!(g.eval(&r.simple_roots()[0].scale(Rational64::new(1, 2)), &r).is_err());
    assert!(LatticeCharacter::new(vec![Scalar::zero()]).is_err());
}

#[test]
fn g_theta_has_order_two_to_the_s() {
    for row in table(4, 2) {
        let r = RestrictedData::new(&row).unwrap();
        let g: Vec<LatticeCharacter<Scalar>> = g_theta(&r).unwrap();
        assert_eq!(g.len(), 1 << row.s_set().len(), "{}", row.name());
    }
}

#[test]
fn lattice_quotients() {
    let ai = lattice_n_and_quotient(&inv(PairType::AI, 2)).unwrap();
    assert!(ai.invariant_factors.is_empty());
    let ci1 = lattice_n_and_quotient(&inv(PairType::CI, 1)).unwrap();
    assert_eq!(ci1.invariant_factors, vec![2]);
    let r = rd(PairType::CI, 1);
    assert_eq!(ci1.n_basis, vec![r.simple_roots()[0].clone()]);
    assert_eq!(ci1.q2sigma_basis, vec![r.simple_roots()[0].scale(Rational64::from_integer(2))]);
    assert_eq!(lattice_n_and_quotient(&inv(PairType::CI, 2)).unwrap().invariant_factors, vec![2]);
}
