use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use proptest::prelude::*;

use qsym::charring::{expand_in_m, is_w_invariant, orbit_sum};
use qsym::qfield::{ParamKind, RatFunc, Symbol};
use qsym::rootdata::{CartanType, InvolutionDatum, PairType, RestrictedData, WeightVec};
use qsym::spherical::Character;
use qsym::{Field, Scalar};

// ---------------------------------------------------------------------------
// Generators

fn symbols() -> [RatFunc; 3] {
    [
        RatFunc::v(),
        RatFunc::symbol(Symbol::param(ParamKind::S, 1).unwrap()),
        RatFunc::symbol(Symbol::param(ParamKind::D, 2).unwrap()),
    ]
}

/// A polynomial in `v`, `s1` and `d2` with small coefficients.
fn poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-4i64..=4, 0i64..4, 0i64..3, 0i64..3), 0..5).prop_map(|terms| {
        let [v, s, d] = symbols();
        terms.into_iter().fold(RatFunc::zero(), |acc, (c, a, b, e)| {
            let m = RatFunc::from_int(c) * &v.powi(a).unwrap() * &s.powi(b).unwrap() * &d.powi(e).unwrap();
            acc + &m
        })
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_map(|(n, d)| if d.is_zero() { n } else { n.try_div(&d).unwrap() })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn pairs() -> Vec<InvolutionDatum> {
    vec![
        InvolutionDatum::new(PairType::AI, 2, None).unwrap(),
        InvolutionDatum::new(PairType::AII, 3, None).unwrap(),
        InvolutionDatum::new(PairType::AIV, 2, None).unwrap(),
        InvolutionDatum::new(PairType::CI, 2, None).unwrap(),
        InvolutionDatum::new(PairType::BII, 2, None).unwrap(),
        InvolutionDatum::new(PairType::Double(CartanType::A), 2, None).unwrap(),
        InvolutionDatum::new(PairType::DIII2, 5, None).unwrap(),
    ]
}

fn pair_index() -> impl Strategy<Value = usize> {
    0..pairs().len()
}

/// An integer combination of the simple restricted roots.
fn restricted_combination(rd: &RestrictedData, coeffs: &[i64]) -> WeightVec {
    rd.simple_roots()
        .iter()
        .zip(coeffs)
        .fold(WeightVec::zero(rd.involution().rank()), |acc, (a, &c)| {
            &acc + &a.scale(Rational64::from_integer(c))
        })
}

// ---------------------------------------------------------------------------
// Scalars

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, RatFunc::zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((a.clone() * &b).try_div(&b).unwrap(), a.clone());
        prop_assert_eq!(RatFunc::parse(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(RatFunc::parse(&a.to_string()).unwrap().to_string(), a.to_string());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in rational(), y in rational(), z in rational()) {
        let point = move |s: Symbol| {
            if s == Symbol::V { Some(x.clone()) }
            else if s.as_param() == Some((ParamKind::S, 1)) { Some(y.clone()) }
            else { Some(z.clone()) }
        };
        let (Ok(ea), Ok(eb)) = (a.eval(&point), b.eval(&point)) else { return Ok(()) };
        prop_assert_eq!((a.clone() + &b).eval(&point).unwrap(), &ea + &eb);
        prop_assert_eq!((a.clone() * &b).eval(&point).unwrap(), &ea * &eb);
        // Partial substitution followed by the rest agrees with full evaluation.
        let v_only = |s: Symbol| (s == Symbol::V).then(|| point(s)).flatten();
        if let Ok(partial) = a.subs(&v_only) {
            prop_assert_eq!(partial.eval(&point).unwrap(), ea);
        }
    }
}

// ---------------------------------------------------------------------------
// Root data

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_an_isometric_involution(k in pair_index(), seed in prop::collection::vec(-3i64..=3, 10)) {
        let inv = &pairs()[k];
        let n = inv.rank();
        let b = WeightVec::from_ints(&seed[..n]);
        let c = WeightVec::from_ints(&seed[seed.len() - n..]);
        let tb = inv.theta(&b).unwrap();
        prop_assert_eq!(inv.theta(&tb).unwrap(), b.clone());
        prop_assert_eq!(
            inv.root().inner(&tb, &inv.theta(&c).unwrap()).unwrap(),
            inv.root().inner(&b, &c).unwrap()
        );
        // beta~ is anti-fixed.
        let t = inv.tilde(&b).unwrap();
        prop_assert_eq!(inv.theta(&t).unwrap(), -&t);
    }

    #[test]
    fn restricted_order_is_a_partial_order(k in pair_index(), x in prop::collection::vec(-3i64..=3, 3), y in prop::collection::vec(-3i64..=3, 3), z in prop::collection::vec(-3i64..=3, 3)) {
        let rd = RestrictedData::new(&pairs()[k]).unwrap();
        let r = rd.rank();
        let [a, b, c] = [&x, &y, &z].map(|v| restricted_combination(&rd, &v[..r]));
        prop_assert!(rd.leq_r(&a, &a).unwrap());
        prop_assert!(!rd.lt_r(&a, &a).unwrap());
        if rd.leq_r(&a, &b).unwrap() && rd.leq_r(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if rd.leq_r(&a, &b).unwrap() && rd.leq_r(&b, &c).unwrap() {
            prop_assert!(rd.leq_r(&a, &c).unwrap());
        }
    }

    #[test]
    fn restricted_reflections_are_involutions(k in pair_index(), x in prop::collection::vec(-3i64..=3, 3)) {
        let rd = RestrictedData::new(&pairs()[k]).unwrap();
        let a = restricted_combination(&rd, &x[..rd.rank()]);
        for i in 0..rd.rank() {
            let s = rd.reflect(i, &a);
            prop_assert_eq!(rd.reflect(i, &s), a.clone());
            prop_assert_eq!(rd.in_p2sigma(&s), rd.in_p2sigma(&a));
        }
    }

    #[test]
    fn weights_stay_in_their_lattice(k in pair_index(), x in prop::collection::vec(-3i64..=3, 5)) {
        let inv = &pairs()[k];
        let rd = RestrictedData::new(inv).unwrap();
        let b = WeightVec::from_ints(&x[..inv.rank()]);
        // 2 beta~ lies in N for every beta in the root lattice.
        let t = inv.tilde(&b).unwrap().scale(Rational64::from_integer(2));
        prop_assert!(rd.in_lattice_n(&t));
    }
}

// ---------------------------------------------------------------------------
// Characters

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn orbit_sums_expand_to_themselves(k in pair_index(), x in prop::collection::vec(0i64..=2, 3), c in -5i64..=5) {
        prop_assume!(c != 0 && c != -1);
        let rd = RestrictedData::new(&pairs()[k]).unwrap();
        let lambda = restricted_combination(&rd, &x[..rd.rank()]);
        prop_assume!(rd.in_p2sigma_dominant(&lambda));
        let m: Character<Scalar> = orbit_sum(&lambda, &rd).unwrap();
        prop_assert!(is_w_invariant(&m, &rd).unwrap());
        let scaled = m.scale(&Scalar::from_int(c)).add(&Character::one(rd.involution().rank()));
        let e = expand_in_m(&scaled, &rd).unwrap();
        prop_assert_eq!(e.get(&lambda).cloned(), Some(if lambda.is_zero() { Scalar::from_int(c + 1) } else { Scalar::from_int(c) }));
        prop_assert_eq!(e.len(), if lambda.is_zero() { 1 } else { 2 });
    }

    #[test]
    fn character_product_is_commutative(a in prop::collection::vec((-2i64..=2, -3i64..=3), 0..4), b in prop::collection::vec((-2i64..=2, -3i64..=3), 0..4)) {
        let build = |t: &[(i64, i64)]| Character::<Scalar>::from_terms(1, t.iter().map(|&(e, c)| (WeightVec::from_ints(&[e]), Scalar::from_int(c))));
        let (x, y) = (build(&a), build(&b));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.mul(&Character::one(1)), x);
    }
}

#[test]
fn one_is_a_unit_for_the_field() {
    let one = RatFunc::one();
    assert!(one.is_one());
    assert_eq!(RatFunc::from_int(7) * &one, RatFunc::from_int(7));
}
