//! Parameters of a coideal subalgebra.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::qfield::{ParamKind, RatFunc, Symbol};
use crate::rootdata::InvolutionDatum;

/// An involution together with parameters `s`, `d` and an optional twist
/// `c`.
///
/// Without a twist the subalgebra described is `B_{theta,s,d}`; with a
/// twist it is `chi_c(B_{theta,s,d})`. Parameters are indexed by node
/// (0-based), with `s_i = 0` off `S`, and `d_i = c_i = 1` off `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairSpec<F> {
    inv: InvolutionDatum,
    s: Vec<F>,
    d: Vec<F>,
    c: Option<Vec<F>>,
}

fn sym(kind: ParamKind, node: usize) -> Result<RatFunc> {
    Ok(RatFunc::symbol(Symbol::param(kind, node + 1)?))
}

impl PairSpec<RatFunc> {
    /// `B_{theta,s,d}` with a free symbol `s_i` for each node of `S` and
    /// `d_i` for each node of `D`.
    pub fn symbolic(inv: &InvolutionDatum) -> Result<Self> {
        let n = inv.rank();
        let mut s = vec![RatFunc::zero(); n];
        let mut d = vec![RatFunc::one(); n];
        for &i in inv.s_set() {
            s[i] = sym(ParamKind::S, i)?;
        }
        for &i in inv.d_set() {
            d[i] = sym(ParamKind::D, i)?;
        }
        Self::plain(inv, s, d)
    }

    /// The partner `chi_c(B_{theta,s',c^2 d})` of [`PairSpec::symbolic`],
    /// with free symbols `s'_i` on `S` and `c_i` on `D`.
    pub fn partner_symbolic(inv: &InvolutionDatum) -> Result<Self> {
        let base = Self::symbolic(inv)?;
        let n = inv.rank();
        let mut sp = vec![RatFunc::zero(); n];
        let mut c = vec![RatFunc::one(); n];
        for &i in inv.s_set() {
            sp[i] = sym(ParamKind::SPrime, i)?;
        }
        for &i in inv.d_set() {
            c[i] = sym(ParamKind::C, i)?;
        }
        base.partner(sp, c)
    }
}

impl<F: Field> PairSpec<F> {
    /// Validates and stores the parameters.
    pub fn new(inv: &InvolutionDatum, s: Vec<F>, d: Vec<F>, c: Option<Vec<F>>) -> Result<Self> {
        let n = inv.rank();
        let ones = vec![F::one(); n];
        let cc = c.as_ref().unwrap_or(&ones);
        for v in [&s, &d, cc] {
            if v.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        for i in 0..n {
            if !inv.s_set().contains(&i) && !s[i].is_zero() {
                return Err(Error::Invalid(format!("s_{} must vanish off S", i + 1)));
            }
            if !inv.d_set().contains(&i) && (!d[i].is_one() || !cc[i].is_one()) {
                return Err(Error::Invalid(format!("d_{0} and c_{0} must be 1 off D", i + 1)));
            }
            if d[i].is_zero() || cc[i].is_zero() {
                return Err(Error::Invalid(format!("d_{0} and c_{0} must be nonzero", i + 1)));
            }
        }
        Ok(PairSpec {
            inv: inv.clone(),
            s,
            d,
            c,
        })
    }

    /// `B_{theta,s,d}`.
    pub fn plain(inv: &InvolutionDatum, s: Vec<F>, d: Vec<F>) -> Result<Self> {
        Self::new(inv, s, d, None)
    }

    /// The partner `chi_c(B_{theta,s',c^2 d})` of `B_{theta,s,d}`.
    pub fn partner(&self, s_prime: Vec<F>, c: Vec<F>) -> Result<Self> {
        if c.len() != self.d.len() {
            return Err(Error::RankMismatch {
                expected: self.d.len(),
                got: c.len(),
            });
        }
        let d = self
            .d
            .iter()
            .zip(&c)
            .map(|(d, c)| d.clone() * c * c)
            .collect();
        Self::new(&self.inv, s_prime, d, Some(c))
    }

    pub fn involution(&self) -> &InvolutionDatum {
        &self.inv
    }

    pub fn s(&self, i: usize) -> &F {
        &self.s[i]
    }

    pub fn d(&self, i: usize) -> &F {
        &self.d[i]
    }

    /// The twist `c`, when the subalgebra is `chi_c(B_{theta,s,d})`.
    pub fn twist(&self) -> Option<&[F]> {
        self.c.as_deref()
    }

    /// The same subalgebra with parameters mapped into another field.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<PairSpec<G>> {
        let map = |v: &[F]| v.iter().map(&f).collect::<Result<Vec<G>>>();
        let c = match &self.c {
            Some(c) => Some(map(c)?),
            None => None,
        };
        PairSpec::new(&self.inv, map(&self.s)?, map(&self.d)?, c)
    }

    /// A copy with `d_i` replaced, bypassing validation. Used to build
    /// deliberately wrong generators for negative controls.
    pub fn with_raw_d(&self, i: usize, value: F) -> Self {
        let mut out = self.clone();
        out.d[i] = value;
        out
    }
}
