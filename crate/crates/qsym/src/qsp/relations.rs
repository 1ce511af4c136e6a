//! Verification of the defining relations among the generators `B_i` on
//! batteries of modules.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::qfield::q_node_pow;
use crate::rootdata::InvolutionDatum;
use crate::uqrep::{qint, ModuleRep, Operator};

use super::generators::PairOps;
use super::presentation::t_theta_basis;
use super::spec::PairSpec;

/// The six families of relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Relation {
    /// Torus weights of the `B_i`; `j` indexes the basis of `T_Theta`.
    I,
    /// Commutation with `t_j^-1 x_j` for `alpha_j` in `pi_Theta`.
    II,
    /// `a_ij = 0`.
    III,
    /// `a_ij = -1`.
    IV,
    /// `a_ij = -2`.
    V,
    /// `a_ij = -3`.
    VI,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::I,
        Relation::II,
        Relation::III,
        Relation::IV,
        Relation::V,
        Relation::VI,
    ];

    /// The Cartan entry `a_ij` the relation applies to, for the Serre-type
    /// relations.
    fn cartan_entry(self) -> Option<i64> {
        match self {
            Relation::III => Some(0),
            Relation::IV => Some(-1),
            Relation::V => Some(-2),
            Relation::VI => Some(-3),
            _ => None,
        }
    }

    /// Every index pair `(i, j)` (0-based) the relation applies to.
    pub fn applicable(self, inv: &InvolutionDatum) -> Vec<(usize, usize)> {
        let n = inv.rank();
        match self {
            Relation::I => {
                let k = t_theta_basis(inv).len();
                (0..n).flat_map(|i| (0..k).map(move |j| (i, j))).collect()
            }
            Relation::II => (0..n)
                .flat_map(|i| inv.pi_theta().iter().map(move |&j| (i, j)))
                .collect(),
            _ => {
                let a = self.cartan_entry().expect("Serre type");
                let root = inv.root();
                (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| i != j && root.a(i, j) == a)
                    .collect()
            }
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::I => "i",
            Relation::II => "ii",
            Relation::III => "iii",
            Relation::IV => "iv",
            Relation::V => "v",
            Relation::VI => "vi",
        };
        f.write_str(s)
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown relation `{s}`")))
    }
}

/// The outcome of one relation on one module.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub pair: String,
    pub relation: Relation,
    /// 1-based node indices (for relation (i), `j` is the 1-based index of
    /// the `T_Theta` basis vector).
    pub i: usize,
    pub j: usize,
    pub module: String,
    pub zero: bool,
    /// A nonzero entry of the residual: row, column and value.
    pub witness: Option<(usize, usize, String)>,
}

/// `p'(i)`: `p(i)` outside `pi_Theta`, undefined inside.
fn p_prime(inv: &InvolutionDatum, i: usize) -> Option<usize> {
    (!inv.in_pi_theta(i)).then(|| inv.p(i))
}

fn product<F: Field>(factors: &[&Operator<F>]) -> Operator<F> {
    let mut it = factors.iter();
    let first = (*it.next().expect("nonempty")).clone();
    it.fold(first, |acc, m| &acc * *m)
}

/// The residual `LHS - RHS` of relation `rel` at `(i, j)` (0-based) on the
/// carrier of `ops`.
pub fn residual<F: Field>(ops: &PairOps<F>, rel: Relation, i: usize, j: usize) -> Result<Operator<F>> {
    let inv = ops.spec().involution();
    if !rel.applicable(inv).contains(&(i, j)) {
        return Err(Error::Invalid(format!(
            "relation ({rel}) does not apply to ({}, {})",
            i + 1,
            j + 1
        )));
    }
    let m = ops.module();
    let v = m.v();
    let di = m.root().d(i);
    let qi = q_node_pow(v, di, 1);
    let qi_inv = q_node_pow(v, di, -1);
    let bi = ops.b_op(i)?;
    match rel {
        Relation::I => {
            let mu = &t_theta_basis(inv)[j];
            let lhs = product(&[&ops.tau(mu)?, &bi, &ops.tau(&-mu)?]);
            let e = m.root().inner_unchecked(mu, &crate::rootdata::WeightVec::simple_root(inv.rank(), i));
            debug_assert!(e.is_integer());
            let scale = v.powi(-2 * e.to_integer()).expect("v is nonzero");
            Ok(&lhs - &bi.scale(&scale))
        }
        Relation::II => {
            let dj = m.root().d(j);
            let tx = &m.t_pow(j, -1) * m.x(j);
            let comm = &(&tx * &bi) - &(&bi * &tx);
            if i != j {
                return Ok(comm);
            }
            let qj = q_node_pow(v, dj, 1);
            let qj_inv = q_node_pow(v, dj, -1);
            let den = (qj - &qj_inv).inv().expect("q is generic");
            let rhs = (&m.t_pow(j, 1) - &m.t_pow(j, -1)).scale(&den);
            Ok(&comm - &rhs)
        }
        Relation::III => {
            let bj = ops.b_op(j)?;
            let lhs = &(&bi * &bj) - &(&bj * &bi);
            if p_prime(inv, i) != Some(j) {
                return Ok(lhs);
            }
            let p = inv.p(i);
            let den = (qi - &qi_inv).inv().expect("q is generic");
            let za = ops.z_element(i)?.scale(ops.spec().d(i));
            let zb = ops.z_element(p)?.scale(ops.spec().d(p));
            let rhs = (&zb - &za).scale(&den);
            Ok(&lhs - &rhs)
        }
        Relation::IV => {
            let bj = ops.b_op(j)?;
            let two = qint(v, 2, di);
            let lhs = &(&product(&[&bi, &bi, &bj]) - &product(&[&bi, &bj, &bi]).scale(&two))
                + &product(&[&bj, &bi, &bi]);
            let mut rhs = ops.zero();
            if p_prime(inv, i) == Some(i) {
                let z = ops.z_element(i)?;
                if inv.in_pi_theta(j) {
                    // B_j does not commute with z here; the extra term comes
                    // from the x_j component of the coproduct of B_i.
                    let den = (qi.clone() - &qi_inv).inv().expect("q is generic");
                    let q2_inv = q_node_pow(v, di, -2);
                    let x = &ops.z_element_without(i, j)? * &m.t_pow(j, 1);
                    let inner = &(&(&bj * &z) - &(&z * &bj).scale(&q2_inv)) + &x.scale(&two);
                    rhs = inner.scale(&den);
                } else {
                    rhs = (&z * &bj).scale(&qi_inv);
                }
            }
            if p_prime(inv, j) == Some(i) {
                let t_mix = &m.t_pow(j, -1) * &m.t_pow(i, 1);
                let t_mix_inv = &m.t_pow(i, -1) * &m.t_pow(j, 1);
                let q2 = q_node_pow(v, di, 2);
                let inner = &t_mix.scale(&(ops.spec().d(i).clone() * &qi_inv))
                    + &t_mix_inv.scale(&(ops.spec().d(j).clone() * &q2));
                rhs = &rhs - &(&bi * &inner).scale(&two);
            }
            Ok(&lhs - &rhs)
        }
        Relation::V => {
            let bj = ops.b_op(j)?;
            let three = qint(v, 3, di);
            let mid = &product(&[&bi, &bj, &bi, &bi]) - &product(&[&bi, &bi, &bj, &bi]);
            let lhs = &(&product(&[&bi, &bi, &bi, &bj]) + &mid.scale(&three))
                - &product(&[&bj, &bi, &bi, &bi]);
            if p_prime(inv, i) != Some(i) {
                return Ok(lhs);
            }
            let rhs = if inv.in_pi_theta(j) {
                let z = ops.z_element(i)?;
                let outer = &product(&[&z, &bi, &bj]) - &product(&[&bj, &bi, &z]);
                let inner = &product(&[&bi, &bj, &z]) - &product(&[&z, &bj, &bi]);
                (&outer + &inner.scale(&three)).scale(&qi_inv)
            } else {
                let two = qint(v, 2, di);
                let c = qi_inv * &two * &two;
                (&(&bi * &bj) - &(&bj * &bi)).scale(&c)
            };
            Ok(&lhs - &rhs)
        }
        Relation::VI => {
            let bj = ops.b_op(j)?;
            let q = |k: i64| q_node_pow(v, di, k);
            let four = qint(v, 4, di);
            let six = q(4) + &q(2) + &F::from_i64(2) + &q(-2) + &q(-4);
            let lhs = &(&(&product(&[&bi, &bi, &bi, &bi, &bj]) + &product(&[&bj, &bi, &bi, &bi, &bi]))
                - &(&product(&[&bi, &bi, &bi, &bj, &bi]) + &product(&[&bi, &bj, &bi, &bi, &bi]))
                    .scale(&four))
                + &product(&[&bi, &bi, &bj, &bi, &bi]).scale(&six);
            if p_prime(inv, i) != Some(i) {
                return Ok(lhs);
            }
            let c1 = q(-5) + &(q(-3) * &F::from_i64(2)) + &(q(-1) * &F::from_i64(4))
                + &(q(1) * &F::from_i64(2))
                + &q(3);
            let c2 = q(4) + &(q(2) * &F::from_i64(4)) + &F::from_i64(5)
                + &(q(-2) * &F::from_i64(5))
                + &(q(-4) * &F::from_i64(4))
                + &q(-6);
            let three = qint(v, 3, di);
            let c3 = q(-2) * &three * &three;
            let rhs = &(&(&product(&[&bi, &bi, &bj]) + &product(&[&bj, &bi, &bi])).scale(&c1)
                - &product(&[&bi, &bj, &bi]).scale(&c2))
                - &bj.scale(&c3);
            Ok(&lhs - &rhs)
        }
    }
}

/// Evaluates a relation on each module of a battery.
pub fn verify_relation<F: Field>(
    spec: &PairSpec<F>,
    rel: Relation,
    i: usize,
    j: usize,
    battery: &[ModuleRep<F>],
) -> Result<Vec<RelationReport>> {
    if battery.is_empty() {
        return Err(Error::Invalid("empty module battery".into()));
    }
    battery
        .iter()
        .map(|m| {
            let ops = PairOps::new(spec, m)?;
            let r = residual(&ops, rel, i, j)?;
            let witness = r
                .first_nonzero()
                .map(|(a, b, x)| (a, b, x.to_string()));
            Ok(RelationReport {
                pair: spec.involution().name(),
                relation: rel,
                i: i + 1,
                j: j + 1,
                module: format!("L{}", m.highest()),
                zero: witness.is_none(),
                witness,
            })
        })
        .collect()
}

/// Evaluates every applicable relation on a battery.
pub fn verify_all<F: Field>(
    spec: &PairSpec<F>,
    battery: &[ModuleRep<F>],
) -> Result<Vec<RelationReport>> {
    let mut out = Vec::new();
    for rel in Relation::ALL {
        for (i, j) in rel.applicable(spec.involution()) {
            out.extend(verify_relation(spec, rel, i, j, battery)?);
        }
    }
    Ok(out)
}

/// True when every report has a zero residual.
pub fn all_zero(reports: &[RelationReport]) -> bool {
    reports.iter().all(|r| r.zero)
}

/// The `count` smallest nontrivial simple modules of dimension at most
/// `max_dim`, built over the deformation value `v`.
pub fn standard_battery<F: Field>(
    root: &crate::rootdata::RootDatum,
    v: &F,
    count: usize,
    max_dim: u64,
) -> Result<Vec<ModuleRep<F>>> {
    root.dominant_weights_up_to(max_dim)
        .into_iter()
        .filter(|(_, d)| *d > 1)
        .take(count)
        .map(|(w, d)| ModuleRep::build(root, v.clone(), &w, d as usize))
        .collect()
}
