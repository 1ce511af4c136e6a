//! Spherical vectors, dual invariants and zonal spherical functions.
//!
//! A spherical vector of `L(lambda)` is a nonzero vector killed by every
//! shifted generator of a [`CoidealPresentation`]. Such a vector is unique
//! up to scale when it exists, and it is normalized to have coefficient one
//! on the highest weight vector. The dual invariant is the analogous
//! covector for the right action. Pairing weight components of a dual
//! invariant with an invariant gives the zonal spherical function.

mod character;
mod point;
mod solve;

pub use character::Character;
pub use point::Point;
pub use solve::{joint_kernel, kernel_dim_at, KernelSolve, Side};

use crate::error::{Error, Result};
use crate::field::{Field, Specialize};
use crate::qfield::Symbol;
use crate::qsp::{CoidealPresentation, PairSpec};
use crate::rootdata::{RestrictedData, WeightVec};
use crate::uqrep::{ModuleRep, Operator};
use crate::Scalar;


// ---------------------------------------------------------------------------
// Invariant vectors

/// A normalized invariant vector (or covector) in a simple module.
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalVector<F> {
    coeffs: Vec<F>,
    top: usize,
}

impl<F: Field> SphericalVector<F> {
    /// Coefficients in the weight basis of the carrier.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Index of the highest weight vector, where the coefficient is one.
    pub fn top(&self) -> usize {
        self.top
    }

    /// True when the highest weight coefficient is one.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[self.top].is_one()
    }

    /// The weights of the basis vectors with nonzero coefficient, without
    /// repetition, in increasing order.
    pub fn support(&self, m: &ModuleRep<F>) -> Vec<WeightVec> {
        let mut out: Vec<WeightVec> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, _)| m.weight(b).clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Index of the highest weight vector of a simple module.
pub fn highest_index<F: Field>(m: &ModuleRep<F>) -> Result<usize> {
    (0..m.dim())
        .find(|&b| m.weight(b) == m.highest())
        .ok_or_else(|| Error::Invalid("module has no highest weight vector".into()))
}

fn solve_presentation<F: Specialize>(
    pres: &CoidealPresentation<F>,
    side: Side,
) -> Result<(usize, Option<SphericalVector<F>>)> {
    let top = highest_index(pres.module())?;
    let ops: Vec<&Operator<F>> = pres
        .generators()
        .iter()
        .filter(|g| !g.diagonal)
        .map(|g| &g.op)
        .collect();
    let sol = joint_kernel(&ops, pres.dim(), &pres.allowed_basis(), top, side)?;
    Ok((sol.dim, sol.vector.map(|coeffs| SphericalVector { coeffs, top })))
}

/// The dimension of the space of invariant vectors together with the
/// normalized invariant vector when that dimension is one.
pub fn invariant_space<F: Specialize>(
    pres: &CoidealPresentation<F>,
) -> Result<(usize, Option<SphericalVector<F>>)> {
    solve_presentation(pres, Side::Right)
}

/// The normalized invariant vector of the presentation's carrier, or
/// `None` when there is none.
///
/// Errors with [`Error::TheoremViolation`] if the invariant space has
/// dimension two or more, or if the highest weight coefficient vanishes.
pub fn invariant_vector<F: Specialize>(
    pres: &CoidealPresentation<F>,
) -> Result<Option<SphericalVector<F>>> {
    Ok(solve_presentation(pres, Side::Right)?.1)
}

/// The normalized covector `w` with `w (b - eps(b)) = 0` for every
/// generator `b`, or `None` when there is none.
pub fn dual_invariant_vector<F: Specialize>(
    pres: &CoidealPresentation<F>,
) -> Result<Option<SphericalVector<F>>> {
    Ok(solve_presentation(pres, Side::Left)?.1)
}

// ---------------------------------------------------------------------------
// Structural checks

/// Support conditions of a spherical vector `xi` of `L(lambda)`: every
/// weight `beta` of the support satisfies `lambda - beta` in the monoid
/// `N`, `lambda` itself occurs, and `beta~ <_r lambda~` for `beta !=
/// lambda`. Returns the failures.
pub fn support_violations<F: Field>(
    xi: &SphericalVector<F>,
    m: &ModuleRep<F>,
    rd: &RestrictedData,
) -> Result<Vec<String>> {
    let lambda = m.highest();
    let support = xi.support(m);
    let mut fails = Vec::new();
    if !support.contains(lambda) {
        fails.push(format!("highest weight {lambda} missing from the support"));
    }
    for beta in &support {
        if !rd.in_monoid_n(&(lambda - beta)) {
            fails.push(format!("{lambda} - {beta} is not in N"));
        }
        if beta != lambda && !rd.lt_r(beta, lambda)? {
            fails.push(format!("{beta} is not <_r {lambda}"));
        }
    }
    Ok(fails)
}

/// The parameter symbols occurring in denominators of the coefficients.
pub fn denominator_parameters(xi: &SphericalVector<Scalar>) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = xi
        .coeffs()
        .iter()
        .flat_map(|c| c.denominator_symbols())
        .filter(|s| s.is_parameter())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// True when every denominator is a monomial in the parameters times a
/// polynomial in `v` alone, that is, the coefficients are Laurent
/// polynomials in the parameters over `Q(v)`.
pub fn parameters_enter_as_laurent(xi: &SphericalVector<Scalar>) -> bool {
    xi.coeffs().iter().all(|c| {
        let mut parts = c.denom().terms().iter().map(|(m, _)| m.without(Symbol::V));
        match parts.next() {
            Some(first) => parts.all(|p| p == first),
            None => true,
        }
    })
}

/// The operators `C_k` (every node) applied to `xi`; all vanish for an
/// invariant vector. Returns the nodes (1-based) where they do not.
pub fn c_elements_failing<F: Field>(
    pres: &CoidealPresentation<F>,
    xi: &SphericalVector<F>,
) -> Result<Vec<usize>> {
    let ops = pres.pair_ops();
    let mut out = Vec::new();
    for k in 0..ops.module().rank() {
        let c = ops.c_op(k)?;
        if c.apply(xi.coeffs()).iter().any(|x| !x.is_zero()) {
            out.push(k + 1);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Matrix coefficients on the torus

/// `Upsilon(c_{w*, w}) = sum_beta <w*_beta, w_beta> z^beta`, pairing the
/// weight components of a covector and a vector of the same module.
pub fn upsilon<F: Field>(w_star: &[F], w: &[F], m: &ModuleRep<F>) -> Result<Character<F>> {
    if w_star.len() != m.dim() || w.len() != m.dim() {
        return Err(Error::Invalid("vector length differs from the module dimension".into()));
    }
    let mut out = Character::zero(m.rank());
    for b in 0..m.dim() {
        if !w_star[b].is_zero() && !w[b].is_zero() {
            out.add_term(m.weight(b).clone(), w_star[b].clone() * &w[b]);
        }
    }
    Ok(out)
}

/// A zonal spherical function with the vectors that produced it.
#[derive(Clone, Debug)]
pub struct Zonal<F> {
    pub lambda: WeightVec,
    /// Invariant vector for the subalgebra acting on the right factor.
    pub xi: SphericalVector<F>,
    /// Dual invariant for the subalgebra acting on the left factor.
    pub xi_star: SphericalVector<F>,
    pub character: Character<F>,
}

/// The zonal spherical function `phi^lambda_{B,B'}`: `xi` is invariant
/// under `B'` (`right`), `xi*` is a dual invariant of `B` (`left`), and the
/// result is `Upsilon(c_{xi*, xi})` normalized to have `z^lambda`
/// coefficient one.
///
/// Checks that `lambda` lies in `P+_Theta`, and asserts the triangular
/// shape: every other exponent `beta` satisfies `beta <_r lambda` and
/// `lambda - beta` lies in `N`.
pub fn zonal<F: Specialize>(
    lambda: &WeightVec,
    left: &PairSpec<F>,
    right: &PairSpec<F>,
    v: F,
    dim_cap: usize,
) -> Result<Zonal<F>> {
    let inv = left.involution();
    if inv != right.involution() {
        return Err(Error::Invalid("the two subalgebras belong to different pairs".into()));
    }
    let rd = RestrictedData::new(inv)?;
    if !rd.in_p_plus_theta(lambda)? {
        return Err(Error::Invalid(format!("{lambda} is not in P+_Theta")));
    }
    let m = ModuleRep::build(inv.root(), v, lambda, dim_cap)?;
    let pres_left = CoidealPresentation::new(left, &m)?;
    let pres_right = CoidealPresentation::new(right, &m)?;
    let missing = |what: &str| {
        Error::TheoremViolation(format!("no {what} in L({lambda}) although it is in P+_Theta"))
    };
    let xi = invariant_vector(&pres_right)?.ok_or_else(|| missing("invariant vector"))?;
    let xi_star = dual_invariant_vector(&pres_left)?.ok_or_else(|| missing("dual invariant"))?;
    let raw = upsilon(xi_star.coeffs(), xi.coeffs(), &m)?;
    let lead = raw.coeff(lambda);
    let lead_inv = lead
        .inv()
        .ok_or_else(|| Error::TheoremViolation("zonal function has no z^lambda term".into()))?;
    let character = raw.scale(&lead_inv);
    for beta in character.support() {
        if beta == lambda {
            continue;
        }
        if !rd.lt_r(beta, lambda)? || !rd.in_monoid_n(&(lambda - beta)) {
            return Err(Error::TheoremViolation(format!(
                "zonal function of {lambda} has exponent {beta} outside lambda - N"
            )));
        }
    }
    Ok(Zonal { lambda: lambda.clone(), xi, xi_star, character })
}
