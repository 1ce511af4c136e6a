//! The invariance system of a coideal subalgebra on a module.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::Result;
use crate::field::Field;
use crate::linalg::integer_kernel;
use crate::rootdata::{InvolutionDatum, WeightVec};
use crate::uqrep::{ModuleRep, Operator};

use super::generators::PairOps;
use super::spec::PairSpec;

/// A basis of the lattice `{mu in Q(pi) : Theta(mu) = mu}`, which indexes
/// the torus part `T_Theta` of the subalgebra.
pub fn t_theta_basis(inv: &InvolutionDatum) -> Vec<WeightVec> {
    let n = inv.rank();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let t = inv.theta_simple(c).coords()[r];
                    debug_assert!(t.is_integer());
                    t.to_integer() - i64::from(r == c)
                })
                .collect()
        })
        .collect();
    integer_kernel(&rows, n)
        .into_iter()
        .map(|k| WeightVec::from_ints(&k))
        .collect()
}

/// One generator `b` of the subalgebra, stored as the operator `b - eps(b)`.
#[derive(Clone, Debug)]
pub struct ShiftedGenerator<F> {
    pub label: String,
    pub op: Operator<F>,
    pub counit: F,
    /// True for generators acting diagonally (torus elements).
    pub diagonal: bool,
}

/// The generators of a coideal subalgebra on a carrier module, each shifted
/// by its counit. A vector is invariant exactly when every operator of the
/// presentation kills it.
#[derive(Clone, Debug)]
pub struct CoidealPresentation<F> {
    ops: PairOps<F>,
    generators: Vec<ShiftedGenerator<F>>,
}

impl<F: Field> CoidealPresentation<F> {
    /// The presentation of the subalgebra described by `spec` on `module`:
    /// `x_j`, `y_j`, `t_j - 1` for `alpha_j` in `pi_Theta`, `tau(mu) - 1` for
    /// `mu` in a basis of the `Theta`-fixed lattice, and `B_i - s_i` for
    /// every node outside `pi_Theta`.
    pub fn new(spec: &PairSpec<F>, module: &ModuleRep<F>) -> Result<Self> {
        let ops = PairOps::new(spec, module)?;
        let inv = spec.involution();
        let m = ops.module();
        let id = m.identity();
        let mut generators = Vec::new();
        for &j in inv.pi_theta() {
            generators.push(ShiftedGenerator {
                label: format!("x{}", j + 1),
                op: m.x(j).clone(),
                counit: F::zero(),
                diagonal: false,
            });
            generators.push(ShiftedGenerator {
                label: format!("y{}", j + 1),
                op: m.y(j).clone(),
                counit: F::zero(),
                diagonal: false,
            });
            generators.push(ShiftedGenerator {
                label: format!("t{} - 1", j + 1),
                op: &m.t_pow(j, 1) - &id,
                counit: F::zero(),
                diagonal: true,
            });
        }
        for mu in t_theta_basis(inv) {
            generators.push(ShiftedGenerator {
                label: format!("tau{mu} - 1"),
                op: &m.act_tau(&mu)? - &id,
                counit: F::zero(),
                diagonal: true,
            });
        }
        for i in inv.non_fixed() {
            let b = ops.b_op(i)?;
            let eps = ops.b_counit(i);
            let op = if eps.is_zero() { b } else { &b - &id.scale(&eps) };
            generators.push(ShiftedGenerator {
                label: format!("B{} - eps", i + 1),
                op,
                counit: eps,
                diagonal: false,
            });
        }
        Ok(CoidealPresentation { ops, generators })
    }

    pub fn pair_ops(&self) -> &PairOps<F> {
        &self.ops
    }

    pub fn spec(&self) -> &PairSpec<F> {
        self.ops.spec()
    }

    /// The carrier module (with the generator action of the specification).
    pub fn module(&self) -> &ModuleRep<F> {
        self.ops.module()
    }

    pub fn generators(&self) -> &[ShiftedGenerator<F>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.module().dim()
    }

    /// Basis vectors on which every diagonal generator vanishes; invariant
    /// vectors are supported on these.
    pub fn allowed_basis(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| {
                self.generators
                    .iter()
                    .filter(|g| g.diagonal)
                    .all(|g| g.op.get(b, b).is_zero())
            })
            .collect()
    }

    /// True when every generator kills `v`.
    pub fn annihilates(&self, v: &[F]) -> bool {
        self.generators
            .iter()
            .all(|g| g.op.apply(v).iter().all(Zero::is_zero))
    }

    /// True when every generator kills the covector `w` under the right
    /// action.
    pub fn annihilates_dual(&self, w: &[F]) -> bool {
        self.generators
            .iter()
            .all(|g| g.op.apply_row(w).iter().all(Zero::is_zero))
    }
}

/// The weights `(rho, Theta(alpha_i) - alpha_i) / 2` for every node, useful
/// for reporting the twist exponents.
pub fn twist_exponents(inv: &InvolutionDatum) -> Vec<Rational64> {
    (0..inv.rank())
        .map(|i| super::generators::twist_exponent(inv, i))
        .collect()
}
