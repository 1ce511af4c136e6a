use num_traits::{One, Zero};

use super::*;
use crate::linalg::SparseMatrix;
use crate::rootdata::{CartanType, InvolutionDatum, PairType, WeightVec};
use crate::uqrep::{ad_r_x, ModuleRep, DEFAULT_DIM_CAP};
use crate::Scalar;

fn inv(pair: PairType, n: usize, r: Option<usize>) -> InvolutionDatum {
    InvolutionDatum::new(pair, n, r).unwrap()
}

fn module(inv: &InvolutionDatum, fund: &[i64]) -> ModuleRep<Scalar> {
    let lambda = inv.root().from_fundamental(fund).unwrap();
    ModuleRep::build(inv.root(), Scalar::v(), &lambda, DEFAULT_DIM_CAP).unwrap()
}

/// The set of weight shifts `wt(row) - wt(col)` of the nonzero entries.
fn shifts(m: &ModuleRep<Scalar>, a: &SparseMatrix<Scalar>) -> Vec<WeightVec> {
    let mut out: Vec<WeightVec> = a.triplets().map(|(r, c, _)| m.weight(r) - m.weight(c)).collect();
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Generators

#[test]
fn split_theta_tilde_is_t_inverse_x() {
    let d = inv(PairType::AI, 2, None);
    let m = module(&d, &[1, 1]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    for i in 0..2 {
        assert_eq!(ops.theta_tilde_y(i).unwrap(), &m.t_pow(i, -1) * m.x(i));
    }
}

#[test]
fn aiv_theta_tilde_uses_partner_node() {
    let d = inv(PairType::AIV, 2, None);
    let m = module(&d, &[1, 0]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    assert_eq!(ops.theta_tilde_y(0).unwrap(), &m.t_pow(1, -1) * m.x(1));
    assert_eq!(ops.theta_tilde_y(1).unwrap(), &m.t_pow(0, -1) * m.x(0));
}

#[test]
fn theta_tilde_has_weight_minus_theta_alpha() {
    let cases = [
        (inv(PairType::AII, 3, None), vec![1, 1, 0]),
        (inv(PairType::BII, 3, None), vec![1, 0, 1]),
        (inv(PairType::CII2, 2, None), vec![1, 1]),
        (inv(PairType::AIII1, 4, Some(2)), vec![1, 0, 0, 1]),
        (inv(PairType::DIII1, 4, None), vec![0, 1, 0, 0]),
    ];
    for (d, fund) in cases {
        let m = module(&d, &fund);
        let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
        for i in d.non_fixed() {
            let th = ops.theta_tilde_y(i).unwrap();
            assert!(!th.is_zero(), "{} node {}", d.name(), i + 1);
            assert_eq!(shifts(&m, &th), vec![-d.theta_simple(i)], "{} node {}", d.name(), i + 1);
            // Highest weight vector for the adjoint action of M.
            for &j in d.pi_theta() {
                assert!(ad_r_x(&m, j, 1, &th).is_zero(), "{} node {}", d.name(), i + 1);
            }
        }
    }
}

#[test]
fn kappa_theta_tilde_is_lowering() {
    let d = inv(PairType::AII, 3, None);
    let m = module(&d, &[0, 1, 0]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    let k = ops.kappa_theta_tilde_y(1).unwrap();
    assert_eq!(shifts(&m, &k), vec![d.theta_simple(1).clone()]);
}

#[test]
fn b_generators_in_pi_theta_are_lowering() {
    let d = inv(PairType::AII, 3, None);
    let m = module(&d, &[1, 0, 0]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    assert_eq!(ops.b_op(0).unwrap(), m.y(0) * &m.t_pow(0, 1));
    assert_eq!(ops.c_op(0).unwrap(), m.x(0).clone());
    assert!(ops.b_counit(0).is_zero());
    assert!(ops.theta_tilde_y(0).is_err());
}

#[test]
fn counit_is_s() {
    let d = inv(PairType::CI, 2, None);
    let spec = PairSpec::symbolic(&d).unwrap();
    let m = module(&d, &[1, 0]);
    let ops = PairOps::new(&spec, &m).unwrap();
    assert_eq!(&ops.b_counit(1), spec.s(1));
    assert!(!spec.s(1).is_zero());
    assert!(ops.b_counit(0).is_zero());
}

#[test]
fn stripped_z_requires_the_factor() {
    let d = inv(PairType::AII, 3, None);
    let m = module(&d, &[1, 0, 0]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    assert!(ops.z_element_without(1, 0).is_ok());
    assert!(ops.z_element_without(1, 1).is_err());
}

// ---------------------------------------------------------------------------
// Specifications and the twist

#[test]
fn spec_validation() {
    let d = inv(PairType::AIV, 2, None);
    let one = Scalar::one();
    let zero = Scalar::zero();
    assert!(PairSpec::plain(&d, vec![zero.clone(); 2], vec![one.clone(); 2]).is_ok());
    // d_2 must be 1 (node 2 is not in D).
    assert!(PairSpec::plain(&d, vec![zero.clone(); 2], vec![one.clone(), Scalar::from_int(2)]).is_err());
    // s must vanish off S.
    assert!(PairSpec::plain(&d, vec![one.clone(), zero.clone()], vec![one.clone(); 2]).is_err());
    // d_1 nonzero.
    assert!(PairSpec::plain(&d, vec![zero.clone(); 2], vec![zero.clone(), one.clone()]).is_err());
    assert!(PairSpec::plain(&d, vec![zero], vec![one.clone(); 2]).is_err());
}

#[test]
fn twisted_carrier_keeps_relations() {
    let d = inv(PairType::CI, 2, None);
    let spec = PairSpec::partner_symbolic(&d).unwrap();
    assert!(spec.twist().is_some());
    let m = module(&d, &[1, 1]);
    let ops = PairOps::new(&spec, &m).unwrap();
    assert!(ops.module().check_relations().is_empty());
    assert_ne!(ops.module().x(0), m.x(0));
    // The twist exponents are integers for every shipped row.
    for row in crate::rootdata::table(6, 3) {
        for e in twist_exponents(&row) {
            assert!((e * 2).is_integer());
        }
    }
}

#[test]
fn twist_with_unit_c_rescales_by_v_powers() {
    let d = inv(PairType::AII, 3, None);
    let spec = PairSpec::symbolic(&d).unwrap();
    let partner = spec
        .partner(vec![Scalar::zero(); 3], vec![Scalar::one(); 3])
        .unwrap();
    let m = module(&d, &[0, 1, 0]);
    let ops = PairOps::new(&partner, &m).unwrap();
    let e = super::generators::rho_defect(&d, 1);
    assert_ne!(e, 0);
    let a = Scalar::v_pow(-e);
    assert_eq!(ops.module().x(1), &m.x(1).scale(&a));
    assert_eq!(ops.module().x(0), m.x(0));
}

// ---------------------------------------------------------------------------
// Presentation

#[test]
fn t_theta_lattice_is_fixed() {
    for row in crate::rootdata::table(5, 3) {
        let basis = t_theta_basis(&row);
        for mu in &basis {
            assert_eq!(&row.theta(mu).unwrap(), mu, "{}", row.name());
        }
    }
    assert!(t_theta_basis(&inv(PairType::AI, 3, None)).is_empty());
    assert_eq!(t_theta_basis(&inv(PairType::AIII2, 3, None)).len(), 1);
    assert_eq!(t_theta_basis(&inv(PairType::Double(CartanType::A), 1, None)).len(), 1);
}

#[test]
fn trivial_module_is_invariant() {
    for d in [inv(PairType::CI, 2, None), inv(PairType::AIV, 2, None), inv(PairType::AII, 3, None)] {
        let m = module(&d, &vec![0; d.rank()]);
        let p = CoidealPresentation::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
        assert_eq!(p.dim(), 1);
        assert!(p.annihilates(&[Scalar::one()]));
        assert!(p.annihilates_dual(&[Scalar::one()]));
        assert_eq!(p.allowed_basis(), vec![0]);
    }
}

#[test]
fn presentation_lists_generators() {
    let d = inv(PairType::AII, 3, None);
    let m = module(&d, &[0, 1, 0]);
    let p = CoidealPresentation::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    let labels: Vec<&str> = p.generators().iter().map(|g| g.label.as_str()).collect();
    assert!(labels.contains(&"x1"));
    assert!(labels.contains(&"B2 - eps"));
    assert_eq!(p.generators().iter().filter(|g| g.diagonal).count(), 2 + t_theta_basis(&d).len());
    // Only the extremal weights +-omega_2 pass the torus conditions.
    let w2 = m.highest().clone();
    let allowed: Vec<WeightVec> = p.allowed_basis().into_iter().map(|b| m.weight(b).clone()).collect();
    assert_eq!(allowed, vec![w2.clone(), -&w2]);
}

// ---------------------------------------------------------------------------
// Relations

fn battery(d: &InvolutionDatum) -> Vec<ModuleRep<Scalar>> {
    standard_battery(d.root(), &Scalar::v(), 3, 30).unwrap()
}

#[test]
fn relations_hold_on_small_pairs() {
    let pairs = [
        inv(PairType::AI, 2, None),
        inv(PairType::AII, 3, None),
        inv(PairType::AIV, 2, None),
        inv(PairType::CI, 2, None),
        inv(PairType::BII, 2, None),
        inv(PairType::CII2, 2, None),
        inv(PairType::Double(CartanType::A), 1, None),
        inv(PairType::AIII2, 3, None),
        inv(PairType::CII1, 3, Some(2)),
        inv(PairType::G, 2, None),
    ];
    for d in pairs {
        let spec = PairSpec::symbolic(&d).unwrap();
        let b = battery(&d);
        assert!(b.len() >= 3);
        let reports = verify_all(&spec, &b).unwrap();
        let bad: Vec<_> = reports.iter().filter(|r| !r.zero).collect();
        assert!(bad.is_empty(), "{}: {bad:?}", d.name());
    }
}

#[test]
fn partner_relations_hold() {
    let d = inv(PairType::CI, 2, None);
    let spec = PairSpec::partner_symbolic(&d).unwrap();
    assert!(all_zero(&verify_all(&spec, &battery(&d)).unwrap()));
}

#[test]
fn rational_specialization_of_relations() {
    let d = inv(PairType::AIV, 3, None);
    let spec = PairSpec::symbolic(&d)
        .unwrap()
        .try_map(|x| x.eval(&|_| Some(crate::Rational::new(5.into(), 3.into()))))
        .unwrap();
    let v = crate::Rational::new(3.into(), 2.into());
    let b = standard_battery(d.root(), &v, 3, 30).unwrap();
    assert!(all_zero(&verify_all(&spec, &b).unwrap()));
}

#[test]
fn perturbed_generator_breaks_relations() {
    let d = inv(PairType::AI, 2, None);
    let spec = PairSpec::symbolic(&d).unwrap().with_raw_d(0, Scalar::from_int(2));
    let reports = verify_all(&spec, &battery(&d)).unwrap();
    assert!(!all_zero(&reports));
    let bad = reports.iter().find(|r| !r.zero).unwrap();
    assert!(bad.witness.is_some());
}

#[test]
fn relation_applicability() {
    let d = inv(PairType::CI, 2, None);
    assert_eq!(Relation::V.applicable(&d), vec![(0, 1)]);
    assert_eq!(Relation::IV.applicable(&d), vec![(1, 0)]);
    assert!(Relation::III.applicable(&d).is_empty());
    assert!(Relation::II.applicable(&d).is_empty());
    let m = module(&d, &[1, 0]);
    let ops = PairOps::new(&PairSpec::symbolic(&d).unwrap(), &m).unwrap();
    assert!(residual(&ops, Relation::VI, 0, 1).is_err());
    assert!(verify_relation(&PairSpec::symbolic(&d).unwrap(), Relation::V, 0, 1, &[]).is_err());
}

#[test]
fn relation_names_round_trip() {
    for r in Relation::ALL {
        assert_eq!(r.to_string().parse::<Relation>().unwrap(), r);
    }
    assert!("vii".parse::<Relation>().is_err());
}

#[test]
fn report_serializes() {
    let d = inv(PairType::AI, 2, None);
    let reports = verify_all(&PairSpec::symbolic(&d).unwrap(), &battery(&d)).unwrap();
    let j = serde_json::to_value(&reports[0]).unwrap();
    assert_eq!(j["pair"], "AI A2");
    assert_eq!(j["zero"], true);
}
