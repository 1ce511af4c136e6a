//! Operators of the generators `theta~(y_i)`, `kappa(theta~(y_i))`, `B_i` and
//! `C_k` on a module.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::SparseMatrix;
use crate::qfield::q_node_pow;
use crate::rootdata::{AdFactor, WeightVec};
use crate::uqrep::{ad_r_x, ad_r_y, ModuleRep, Operator};

use super::spec::PairSpec;

/// A pair specification attached to a carrier module.
///
/// For a twisted specification the carrier's generators are rescaled by
/// `chi_c`, so every operator built here is the image under `chi_c` of the
/// corresponding element of `B_{theta,s,d}`.
#[derive(Clone, Debug)]
pub struct PairOps<F> {
    spec: PairSpec<F>,
    module: ModuleRep<F>,
}

/// `(rho, Theta(alpha_i) - alpha_i)`, an integer.
pub(crate) fn rho_defect(spec_inv: &crate::rootdata::InvolutionDatum, i: usize) -> i64 {
    let root = spec_inv.root();
    let n = root.rank();
    let diff = spec_inv.theta_simple(i) - &WeightVec::simple_root(n, i);
    let e = root.inner_unchecked(root.rho(), &diff);
    debug_assert!(e.is_integer());
    e.to_integer()
}

impl<F: Field> PairOps<F> {
    pub fn new(spec: &PairSpec<F>, module: &ModuleRep<F>) -> Result<Self> {
        let inv = spec.involution();
        if inv.root().cartan() != module.root().cartan() {
            return Err(Error::Invalid("module and pair use different root data".into()));
        }
        let module = match spec.twist() {
            None => module.clone(),
            Some(c) => twist(module, spec, c)?,
        };
        Ok(PairOps {
            spec: spec.clone(),
            module,
        })
    }

    pub fn spec(&self) -> &PairSpec<F> {
        &self.spec
    }

    /// The carrier with the generator action used to build the operators
    /// (rescaled by `chi_c` for a twisted specification).
    pub fn module(&self) -> &ModuleRep<F> {
        &self.module
    }

    fn check_outside(&self, i: usize) -> Result<()> {
        let inv = self.spec.involution();
        if i >= inv.rank() {
            return Err(Error::Invalid(format!("node {} out of range", i + 1)));
        }
        if inv.in_pi_theta(i) {
            return Err(Error::Invalid(format!("node {} lies in pi_Theta", i + 1)));
        }
        Ok(())
    }

    /// Applies `(ad_r x_{i_1}^(m_1)) ... (ad_r x_{i_r}^(m_r))` to `a`, the
    /// rightmost factor first.
    fn apply_x_sequence(&self, seq: &[AdFactor], a: Operator<F>) -> Operator<F> {
        seq.iter()
            .rev()
            .fold(a, |acc, &(k, m)| ad_r_x(&self.module, k, m, &acc))
    }

    fn apply_y_sequence(&self, seq: &[AdFactor], a: Operator<F>) -> Operator<F> {
        seq.iter()
            .rev()
            .fold(a, |acc, &(k, m)| ad_r_y(&self.module, k, m, &acc))
    }

    /// `(ad_r Z_i) A`, where `theta~(y_i) = (ad_r Z_i) t_{p(i)}^-1 x_{p(i)}`;
    /// the sign of a partner node is part of `Z_i`.
    pub fn ad_z(&self, i: usize, a: &Operator<F>) -> Result<Operator<F>> {
        self.check_outside(i)?;
        let (seq, sign) = self.spec.involution().ad_sequence(i)?;
        let out = self.apply_x_sequence(&seq, a.clone());
        Ok(if sign < 0 { -&out } else { out })
    }

    /// The operator of `theta~(y_i)`.
    pub fn theta_tilde_y(&self, i: usize) -> Result<Operator<F>> {
        let p = self.spec.involution().p(i);
        let seed = &self.module.t_pow(p, -1) * self.module.x(p);
        self.ad_z(i, &seed)
    }

    /// The operator of `kappa(theta~(y_i)) =
    /// (-1)^(m_1+...+m_r) (ad_r y_{i_1}^(m_1)) ... (ad_r y_{i_r}^(m_r)) y_{p(i)}`.
    pub fn kappa_theta_tilde_y(&self, i: usize) -> Result<Operator<F>> {
        self.check_outside(i)?;
        let inv = self.spec.involution();
        let (seq, sign) = inv.ad_sequence(i)?;
        let total: u32 = seq.iter().map(|f| f.1).sum();
        let out = self.apply_y_sequence(&seq, self.module.y(inv.p(i)).clone());
        let sign = sign * if total.is_multiple_of(2) { 1 } else { -1 };
        Ok(if sign < 0 { -&out } else { out })
    }

    /// The operator of `B_i = y_i t_i + d_i theta~(y_i) t_i + s_i t_i`, and
    /// `B_i = y_i t_i` for nodes of `pi_Theta`.
    pub fn b_op(&self, i: usize) -> Result<Operator<F>> {
        let t = self.module.t_pow(i, 1);
        let yt = self.module.y(i) * &t;
        if self.spec.involution().in_pi_theta(i) {
            return Ok(yt);
        }
        let th = &self.theta_tilde_y(i)? * &t;
        let mut out = &yt + &th.scale(self.spec.d(i));
        if !self.spec.s(i).is_zero() {
            out = &out + &t.scale(self.spec.s(i));
        }
        Ok(out)
    }

    /// The counit of `B_i`.
    pub fn b_counit(&self, i: usize) -> F {
        if self.spec.involution().in_pi_theta(i) {
            F::zero()
        } else {
            self.spec.s(i).clone()
        }
    }

    /// The operator of `C_k = x_k + q_k^2 d_{p(k)}^-1 kappa(theta~(y_k)) t_k
    /// + q_k^2 s_k (t_k - 1)`, and `C_k = x_k` for nodes of `pi_Theta`.
    pub fn c_op(&self, k: usize) -> Result<Operator<F>> {
        let inv = self.spec.involution();
        if inv.in_pi_theta(k) {
            return Ok(self.module.x(k).clone());
        }
        let m = &self.module;
        let q2 = q_node_pow(m.v(), m.root().d(k), 2);
        let t = m.t_pow(k, 1);
        let d_inv = self.spec.d(inv.p(k)).inv().expect("d is nonzero");
        let kappa = &self.kappa_theta_tilde_y(k)? * &t;
        let mut out = m.x(k) + &kappa.scale(&(q2.clone() * &d_inv));
        if !self.spec.s(k).is_zero() {
            let shift = &t - &m.identity();
            out = &out + &shift.scale(&(q2 * self.spec.s(k)));
        }
        Ok(out)
    }

    /// `[(ad_r Z_i) t_{p(i)}^-2] t_i t_{p(i)}`, which lies in `B`.
    pub fn z_element(&self, i: usize) -> Result<Operator<F>> {
        let p = self.spec.involution().p(i);
        let m = &self.module;
        let inner = self.ad_z(i, &m.t_pow(p, -2))?;
        Ok(&(&inner * &m.t_pow(i, 1)) * &m.t_pow(p, 1))
    }

    /// `[(ad_r Z'_i) t_{p(i)}^-2] t_i t_{p(i)}`, where `Z'_i` is `Z_i` with
    /// one factor `x_j` removed at its first occurrence in the sequence.
    pub fn z_element_without(&self, i: usize, j: usize) -> Result<Operator<F>> {
        self.check_outside(i)?;
        let inv = self.spec.involution();
        let (mut seq, sign) = inv.ad_sequence(i)?;
        let k = seq.iter().position(|f| f.0 == j).ok_or_else(|| {
            Error::Invalid(format!("x_{} does not occur in Z_{}", j + 1, i + 1))
        })?;
        if seq[k].1 == 1 {
            seq.remove(k);
        } else {
            seq[k].1 -= 1;
        }
        let p = inv.p(i);
        let m = &self.module;
        let inner = self.apply_x_sequence(&seq, m.t_pow(p, -2));
        let inner = if sign < 0 { -&inner } else { inner };
        Ok(&(&inner * &m.t_pow(i, 1)) * &m.t_pow(p, 1))
    }

    /// `tau(mu)` on the carrier.
    pub fn tau(&self, mu: &WeightVec) -> Result<Operator<F>> {
        self.module.act_tau(mu)
    }

    pub fn identity(&self) -> Operator<F> {
        self.module.identity()
    }

    pub fn zero(&self) -> Operator<F> {
        SparseMatrix::zeros(self.module.dim(), self.module.dim())
    }
}

/// The carrier with `x_i -> a_i x_i`, `y_i -> a_i^-1 y_i` for nodes outside
/// `pi_Theta`, where `a_i = q^{-(rho, Theta(alpha_i) - alpha_i)/2} c_i^-1`.
fn twist<F: Field>(module: &ModuleRep<F>, spec: &PairSpec<F>, c: &[F]) -> Result<ModuleRep<F>> {
    let inv = spec.involution();
    let n = inv.rank();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for i in 0..n {
        if inv.in_pi_theta(i) {
            x.push(module.x(i).clone());
            y.push(module.y(i).clone());
            continue;
        }
        // q^{-e/2} = v^{-e}
        let e = rho_defect(inv, i);
        let a = module.v().powi(-e).expect("v is nonzero") * &c[i].inv().expect("c is nonzero");
        let a_inv = a.inv().expect("nonzero");
        x.push(module.x(i).scale(&a));
        y.push(module.y(i).scale(&a_inv));
    }
    ModuleRep::from_parts(
        module.root(),
        module.v().clone(),
        module.highest().clone(),
        module.weights().to_vec(),
        x,
        y,
    )
}

/// The exponent `(rho, Theta(alpha_i) - alpha_i) / 2` of the twist as a
/// rational number.
pub fn twist_exponent(inv: &crate::rootdata::InvolutionDatum, i: usize) -> Rational64 {
    Rational64::new(rho_defect(inv, i), 2)
}
