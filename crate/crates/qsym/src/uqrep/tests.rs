use num_traits::{One, Zero};

use super::*;
use crate::linalg::SparseMatrix;
use crate::rootdata::{CartanType, RootDatum, WeightVec};
use crate::{Rational, Scalar};

fn module(ty: CartanType, n: usize, fund: &[i64]) -> ModuleRep<Scalar> {
    let root = RootDatum::simple(ty, n).unwrap();
    let lambda = root.from_fundamental(fund).unwrap();
    ModuleRep::build(&root, Scalar::v(), &lambda, DEFAULT_DIM_CAP).unwrap()
}

fn q_pow(k: i64) -> Scalar {
    Scalar::v_pow(2 * k)
}

#[test]
fn sl2_modules() {
    let m = module(CartanType::A, 1, &[2]);
    assert_eq!(m.dim(), 3);
    let ws: Vec<WeightVec> = m.weights().to_vec();
    assert_eq!(
        ws,
        vec![
            WeightVec::from_ints(&[1]),
            WeightVec::from_ints(&[0]),
            WeightVec::from_ints(&[-1])
        ]
    );
    let m = module(CartanType::A, 1, &[1]);
    assert!(m.y(0).get(1, 0).is_one());
    assert!(m.x(0).get(0, 1).is_one());
}

#[test]
fn a2_fundamental() {
    let m = module(CartanType::A, 2, &[1, 0]);
    let w1 = m.highest().clone();
    let a1 = WeightVec::simple_root(2, 0);
    let a2 = WeightVec::simple_root(2, 1);
    assert_eq!(m.weights(), &[w1.clone(), &w1 - &a1, &(&w1 - &a1) - &a2]);
}

#[test]
fn relations_hold_across_types() {
    let cases: &[(CartanType, usize, &[i64])] = &[
        (CartanType::A, 2, &[1, 1]),
        (CartanType::A, 3, &[0, 1, 0]),
        (CartanType::B, 2, &[1, 0]),
        (CartanType::B, 2, &[0, 1]),
        (CartanType::B, 2, &[1, 1]),
        (CartanType::C, 2, &[2, 0]),
        (CartanType::C, 3, &[0, 0, 1]),
        (CartanType::G, 2, &[1, 0]),
        (CartanType::G, 2, &[0, 1]),
    ];
    for &(ty, n, fund) in cases {
        let m = module(ty, n, fund);
        let fails = m.check_relations();
        assert!(fails.is_empty(), "{ty:?}{n} {fund:?}: {fails:?}");
        let fails = m.check_highest_weight();
        assert!(fails.is_empty(), "{ty:?}{n} {fund:?}: {fails:?}");
    }
}

#[test]
fn rational_specialization_agrees_with_dimension() {
    let root = RootDatum::simple(CartanType::B, 3).unwrap();
    let lambda = root.from_fundamental(&[1, 0, 1]).unwrap();
    let v = Rational::new(3.into(), 2.into());
    let m = ModuleRep::build(&root, v, &lambda, DEFAULT_DIM_CAP).unwrap();
    assert_eq!(m.dim(), 48);
    assert!(m.check_relations().is_empty());
}

#[test]
fn dimension_cap() {
    let root = RootDatum::simple(CartanType::A, 2).unwrap();
    let lambda = root.from_fundamental(&[3, 3]).unwrap();
    let err = ModuleRep::build(&root, Scalar::v(), &lambda, 20).unwrap_err();
    assert!(matches!(err, crate::Error::ResourceCap(_)));
    let bad = WeightVec::from_ints(&[-1, 0]);
    assert!(ModuleRep::build(&root, Scalar::v(), &bad, 20).is_err());
}

#[test]
fn torus_action() {
    let m = module(CartanType::A, 1, &[1]);
    assert_eq!(m.act_tau(&WeightVec::zero(1)).unwrap(), m.identity());
    let t = m.act_tau(&WeightVec::from_ints(&[1])).unwrap();
    assert_eq!(t, SparseMatrix::diagonal(vec![q_pow(1), q_pow(-1)]));
    let a = WeightVec::parse("1/2").unwrap();
    let b = WeightVec::parse("3/2").unwrap();
    assert_eq!(
        &m.act_tau(&a).unwrap() * &m.act_tau(&b).unwrap(),
        m.act_tau(&(&a + &b)).unwrap()
    );
    assert!(m.act_tau(&WeightVec::parse("1/4").unwrap()).is_err());
}

#[test]
fn adjoint_action() {
    let m = module(CartanType::A, 2, &[1, 1]);
    let id = m.identity();
    assert!(ad_r_x(&m, 0, 1, &id).is_zero());
    // (ad_r y_j) t_i^-1 x_i = 0 for i != j.
    let seed = &m.t_pow(0, -1) * m.x(0);
    assert!(ad_r_y(&m, 1, 1, &seed).is_zero());
    // Right action: ad_r x_1 (ad_r x_0 A) is ad_r of the product x_0 x_1,
    // expanded through the coproduct.
    let a = m.y(0).clone();
    let lhs = ad_r_x(&m, 1, 1, &ad_r_x(&m, 0, 1, &a));
    let (tj, ti) = (m.t_pow(0, -1), m.t_pow(1, -1));
    let (xj, xi) = (m.x(0), m.x(1));
    let t1 = &(&(&(&ti * xi) * &tj) * xj) * &a;
    let t2 = &(&(&(&ti * &tj) * xj) * &a) * xi;
    let t3 = &(&(&(&ti * xi) * &tj) * &a) * xj;
    let t4 = &(&(&(&ti * &tj) * &a) * xj) * xi;
    let rhs = &(&(&t1 - &t2) - &t3) + &t4;
    assert_eq!(lhs, rhs);
    // Divided powers.
    let two = ad_r_x(&m, 0, 2, &a);
    let once = ad_r_x(&m, 0, 1, &ad_r_x(&m, 0, 1, &a));
    let qq = q_pow(1) + &q_pow(-1);
    assert_eq!(two.scale(&qq), once);
}

#[test]
fn tensor_products() {
    let m = module(CartanType::A, 1, &[1]);
    let mm = m.tensor(&m).unwrap();
    assert!(mm.check_relations().is_empty());
    // x (v_- (x) v_-) = v_+ (x) v_- + q^-1 v_- (x) v_+
    let col: Vec<Scalar> = (0..4).map(|r| mm.x(0).get(r, 3)).collect();
    assert_eq!(col, vec![Scalar::zero(), Scalar::one(), q_pow(-1), Scalar::zero()]);
    let t = WeightVec::from_ints(&[1]);
    let diag = mm.t_diag(&t).unwrap();
    assert_eq!(diag[1], Scalar::one());
    // Coassociativity.
    let m2 = module(CartanType::A, 1, &[2]);
    let left = mm.tensor(&m2).unwrap();
    let right = m.tensor(&m.tensor(&m2).unwrap()).unwrap();
    assert_eq!(left.x(0), right.x(0));
    assert_eq!(left.y(0), right.y(0));
    assert_eq!(left.weights(), right.weights());
}

#[test]
fn dual_right_action() {
    let m = module(CartanType::A, 2, &[1, 0]);
    let top = vec![Scalar::one(), Scalar::zero(), Scalar::zero()];
    assert!(m.dual_act(m.y(0), &top).iter().all(Zero::is_zero));
    assert!(!m.dual_act(m.x(0), &top).iter().all(Zero::is_zero));
    // (w* . u)(w) = w*(u w) for a word u.
    let u = &(m.y(1) * m.x(1)) * m.y(0);
    let w: Vec<Scalar> = vec![Scalar::one(), Scalar::from_int(2), Scalar::v()];
    let ws = vec![Scalar::from_int(3), Scalar::v(), Scalar::one()];
    let pair = |a: &[Scalar], b: &[Scalar]| {
        a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + &(x.clone() * y))
    };
    assert_eq!(pair(&m.dual_act(&u, &ws), &w), pair(&ws, &u.apply(&w)));
}

#[test]
fn json_export() {
    let m = module(CartanType::A, 1, &[1]);
    let j = m.to_json();
    assert_eq!(j["dim"], 2);
    assert_eq!(j["x"][0][0][2], "1");
}
