//! Simple modules `L(lambda)` and their tensor products as matrices.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rref, SparseMatrix};
use crate::qfield::{gauss_factorial, q_node_pow};
use crate::rootdata::{RootDatum, WeightVec};

/// The default bound on module dimensions.
pub const DEFAULT_DIM_CAP: usize = 200;

/// A matrix acting on the carrier space of a [`ModuleRep`].
pub type Operator<F> = SparseMatrix<F>;

/// A finite-dimensional weight module given by the matrices of the
/// generators `x_i`, `y_i`. The torus acts diagonally through the weights
/// of the basis vectors.
///
/// A module built by [`ModuleRep::build`] is the simple module
/// `L(lambda)` with the highest weight vector first. A module built by
/// [`ModuleRep::tensor`] carries the coproduct action
/// `Delta(x_i) = x_i (x) 1 + t_i (x) x_i`,
/// `Delta(y_i) = y_i (x) t_i^-1 + 1 (x) y_i`.
#[derive(Clone, Debug)]
pub struct ModuleRep<F> {
    root: RootDatum,
    v: F,
    highest: WeightVec,
    weights: Vec<WeightVec>,
    x: Vec<Operator<F>>,
    y: Vec<Operator<F>>,
    simple: bool,
}

/// The quantum integer `[n]_{q_i}` for any integer `n`.
pub(crate) fn qint<F: Field>(v: &F, n: i64, d: i64) -> F {
    let mut acc = F::zero();
    for k in 0..n.abs() {
        acc += &q_node_pow(v, d, n.abs() - 1 - 2 * k);
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

impl<F: Field> ModuleRep<F> {
    /// Builds `L(lambda)` with `v` as the value of the deformation symbol.
    ///
    /// Weight spaces are produced in order of depth below `lambda`. The
    /// candidates for the weight space of `mu` are the vectors `y_i w` with
    /// `w` in a basis of the weight space of `mu + alpha_i`; a vector of
    /// weight below `lambda` vanishes in `L(lambda)` exactly when every
    /// `x_j` kills it, so a basis is a maximal set of candidates whose
    /// images under all `x_j` are independent.
    pub fn build(root: &RootDatum, v: F, lambda: &WeightVec, cap: usize) -> Result<Self> {
        let n = root.rank();
        root.dominant_coords(lambda)?;
        let expected = root.weyl_dimension(lambda)?;
        let expected: usize = expected
            .try_into()
            .map_err(|_| Error::ResourceCap(format!("dim L({lambda}) overflows")))?;
        if expected > cap {
            return Err(Error::ResourceCap(format!(
                "dim L({lambda}) = {expected} exceeds the cap {cap}"
            )));
        }
        let d: Vec<i64> = root.symmetrizers().to_vec();

        // Depth vectors `k` with `mu = lambda - sum k_i alpha_i`.
        let mut depth: Vec<Vec<i64>> = vec![vec![0; n]];
        let mut block_of: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        block_of.insert(vec![0; n], vec![0]);
        // Column lists: `x_cols[j][b]` is `x_j` applied to basis vector `b`.
        let mut x_cols: Vec<Vec<Vec<(usize, F)>>> = vec![vec![Vec::new()]; n];
        let mut y_cols: Vec<Vec<Vec<(usize, F)>>> = vec![vec![Vec::new()]; n];
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; n]];

        while !frontier.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for k in &frontier {
                for i in 0..n {
                    let mut c = k.clone();
                    c[i] += 1;
                    if !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            next.sort();
            let mut new_frontier = Vec::new();
            for k in next {
                let lower = |j: usize| {
                    let mut c = k.clone();
                    c[j] -= 1;
                    c
                };
                // Candidates `(i, w)`.
                let mut cands: Vec<(usize, usize)> = Vec::new();
                for i in 0..n {
                    if let Some(block) = block_of.get(&lower(i)) {
                        cands.extend(block.iter().map(|&w| (i, w)));
                    }
                }
                if cands.is_empty() {
                    continue;
                }
                // Image coordinates: concatenation of the blocks `k - e_j`.
                let mut pos: HashMap<usize, usize> = HashMap::new();
                for j in 0..n {
                    if let Some(block) = block_of.get(&lower(j)) {
                        for &b in block {
                            let len = pos.len();
                            pos.insert(b, len);
                        }
                    }
                }
                let nimg = pos.len();
                let mut images: Vec<Vec<F>> = Vec::with_capacity(cands.len());
                for &(i, w) in &cands {
                    let mut img = vec![F::zero(); nimg];
                    for j in 0..n {
                        // x_j y_i w = y_i x_j w + delta_ij [<wt w, alpha_i^v>]_{q_i} w
                        for (u, a) in &x_cols[j][w] {
                            for (t, b) in &y_cols[i][*u] {
                                img[pos[t]] += &(a.clone() * b);
                            }
                        }
                        if i == j {
                            let wt = weight_of(lambda, &depth[w]);
                            let h = root.coroot_pairing(&wt, i);
                            debug_assert!(h.is_integer());
                            img[pos[&w]] += &qint(&v, h.to_integer(), d[i]);
                        }
                    }
                    images.push(img);
                }
                // Columns are candidates.
                let rows: Vec<Vec<F>> = (0..nimg)
                    .map(|r| images.iter().map(|img| img[r].clone()).collect())
                    .collect();
                let red = rref(rows, cands.len());
                if red.rank() == 0 {
                    continue;
                }
                let start = depth.len();
                let mut block = Vec::new();
                let inv_pos: Vec<usize> = {
                    let mut ip = vec![0; nimg];
                    for (&b, &p) in &pos {
                        ip[p] = b;
                    }
                    ip
                };
                for (t, &p) in red.pivots.iter().enumerate() {
                    let b = start + t;
                    block.push(b);
                    depth.push(k.clone());
                    for col in x_cols.iter_mut().chain(y_cols.iter_mut()) {
                        col.push(Vec::new());
                    }
                    // x_j of the new basis vector.
                    let img = &images[p];
                    for (r, val) in img.iter().enumerate() {
                        if val.is_zero() {
                            continue;
                        }
                        let target = inv_pos[r];
                        let j = (0..n)
                            .find(|&j| depth[target] == lower(j))
                            .expect("image lies one step up");
                        x_cols[j][b].push((target, val.clone()));
                    }
                }
                // y_i w in the new basis.
                for (c, &(i, w)) in cands.iter().enumerate() {
                    for (t, row) in red.rows.iter().enumerate() {
                        if !row[c].is_zero() {
                            y_cols[i][w].push((start + t, row[c].clone()));
                        }
                    }
                }
                if depth.len() > cap {
                    return Err(Error::ResourceCap(format!(
                        "module dimension exceeds the cap {cap}"
                    )));
                }
                block_of.insert(k.clone(), block);
                new_frontier.push(k);
            }
            frontier = new_frontier;
        }

        let dim = depth.len();
        if dim != expected {
            return Err(Error::TheoremViolation(format!(
                "L({lambda}) built with dimension {dim}, Weyl dimension {expected}"
            )));
        }
        let to_matrix = |cols: &Vec<Vec<(usize, F)>>| {
            let mut trips = Vec::new();
            for (c, col) in cols.iter().enumerate() {
                for (r, x) in col {
                    trips.push((*r, c, x.clone()));
                }
            }
            SparseMatrix::from_triplets(dim, dim, trips)
        };
        Ok(ModuleRep {
            root: root.clone(),
            v,
            highest: lambda.clone(),
            weights: depth.iter().map(|k| weight_of(lambda, k)).collect(),
            x: x_cols.iter().map(to_matrix).collect(),
            y: y_cols.iter().map(to_matrix).collect(),
            simple: true,
        })
    }

    /// Builds a module from explicit data. The caller is responsible for
    /// the relations; [`ModuleRep::check_relations`] verifies them.
    pub fn from_parts(
        root: &RootDatum,
        v: F,
        highest: WeightVec,
        weights: Vec<WeightVec>,
        x: Vec<Operator<F>>,
        y: Vec<Operator<F>>,
    ) -> Result<Self> {
        let n = root.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: x.len().min(y.len()),
            });
        }
        let dim = weights.len();
        for w in &weights {
            w.check_rank(n)?;
        }
        if x.iter().chain(&y).any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::Invalid("generator matrix has the wrong size".into()));
        }
        Ok(ModuleRep {
            root: root.clone(),
            v,
            highest,
            weights,
            x,
            y,
            simple: false,
        })
    }

    /// The tensor product `self (x) other` with the coproduct action; the
    /// basis is ordered with the index of `other` varying fastest.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.root.cartan() != other.root.cartan() || self.v != other.v {
            return Err(Error::Invalid("tensor factors over different data".into()));
        }
        let n = self.rank();
        let ia = SparseMatrix::identity(self.dim());
        let ib = SparseMatrix::identity(other.dim());
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for i in 0..n {
            let ta = SparseMatrix::diagonal(self.t_diag_simple(i, 1));
            let tb_inv = SparseMatrix::diagonal(other.t_diag_simple(i, -1));
            x.push(&self.x[i].kron(&ib) + &ta.kron(&other.x[i]));
            y.push(&self.y[i].kron(&tb_inv) + &ia.kron(&other.y[i]));
        }
        let mut weights = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.weights {
            for b in &other.weights {
                weights.push(a + b);
            }
        }
        Ok(ModuleRep {
            root: self.root.clone(),
            v: self.v.clone(),
            highest: &self.highest + &other.highest,
            weights,
            x,
            y,
            simple: false,
        })
    }
}

fn weight_of(lambda: &WeightVec, k: &[i64]) -> WeightVec {
    lambda - &WeightVec::from_ints(k)
}

// ---------------------------------------------------------------------------
// Accessors and torus action
// ---------------------------------------------------------------------------

impl<F: Field> ModuleRep<F> {
    pub fn root(&self) -> &RootDatum {
        &self.root
    }

    /// The value of the deformation symbol `v` (`q = v^2`).
    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.root.rank()
    }

    /// The highest weight (the sum of the factors' highest weights for a
    /// tensor product).
    pub fn highest(&self) -> &WeightVec {
        &self.highest
    }

    /// True for modules produced by [`ModuleRep::build`].
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[WeightVec] {
        &self.weights
    }

    pub fn weight(&self, b: usize) -> &WeightVec {
        &self.weights[b]
    }

    pub fn x(&self, i: usize) -> &Operator<F> {
        &self.x[i]
    }

    pub fn y(&self, i: usize) -> &Operator<F> {
        &self.y[i]
    }

    pub fn identity(&self) -> Operator<F> {
        SparseMatrix::identity(self.dim())
    }

    /// `q_i = q^{d_i}`.
    pub fn q_i(&self, i: usize) -> F {
        q_node_pow(&self.v, self.root.d(i), 1)
    }

    /// Basis indices grouped by weight.
    pub fn weight_blocks(&self) -> BTreeMap<WeightVec, Vec<usize>> {
        let mut out: BTreeMap<WeightVec, Vec<usize>> = BTreeMap::new();
        for (b, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(b);
        }
        out
    }

    /// Diagonal of `t_i^e`.
    fn t_diag_simple(&self, i: usize, e: i64) -> Vec<F> {
        let d = self.root.d(i);
        self.weights
            .iter()
            .map(|w| {
                let h = self.root.coroot_pairing(w, i);
                q_node_pow(&self.v, d, e * h.to_integer())
            })
            .collect()
    }

    /// Diagonal entries `q^{(wt b, mu)}` of `tau(mu)`.
    pub fn t_diag(&self, mu: &WeightVec) -> Result<Vec<F>> {
        mu.check_rank(self.rank())?;
        self.weights
            .iter()
            .map(|w| {
                let e = self.root.inner_unchecked(w, mu) * Rational64::from_integer(2);
                if !e.is_integer() {
                    return Err(Error::NonHalfIntegerExponent(format!(
                        "{}",
                        e / Rational64::from_integer(2)
                    )));
                }
                Ok(self.v.powi(e.to_integer()).expect("v is nonzero"))
            })
            .collect()
    }

    /// The operator `tau(mu)`.
    pub fn act_tau(&self, mu: &WeightVec) -> Result<Operator<F>> {
        Ok(SparseMatrix::diagonal(self.t_diag(mu)?))
    }

    /// `t_i^e = tau(e alpha_i)`.
    pub fn t_pow(&self, i: usize, e: i64) -> Operator<F> {
        SparseMatrix::diagonal(self.t_diag_simple(i, e))
    }

    /// The divided power `x_i^(m)`.
    pub fn x_divided(&self, i: usize, m: u32) -> Operator<F> {
        divided(&self.x[i], m, &self.v, self.root.d(i))
    }

    /// The divided power `y_i^(m)`.
    pub fn y_divided(&self, i: usize, m: u32) -> Operator<F> {
        divided(&self.y[i], m, &self.v, self.root.d(i))
    }

    /// The right action of an operator on a covector of the dual module:
    /// `(w* . u)(w) = w*(u w)`.
    pub fn dual_act(&self, op: &Operator<F>, covector: &[F]) -> Vec<F> {
        op.apply_row(covector)
    }

    /// A module with the same matrices over another field, obtained by an
    /// entrywise map (for example specialization of symbols).
    pub fn try_map_field<G: Field>(
        &self,
        v: G,
        f: impl Fn(&F) -> Result<G>,
    ) -> Result<ModuleRep<G>> {
        Ok(ModuleRep {
            root: self.root.clone(),
            v,
            highest: self.highest.clone(),
            weights: self.weights.clone(),
            x: self.x.iter().map(|m| m.try_map(&f)).collect::<Result<_>>()?,
            y: self.y.iter().map(|m| m.try_map(&f)).collect::<Result<_>>()?,
            simple: self.simple,
        })
    }
}

fn divided<F: Field>(m: &Operator<F>, k: u32, v: &F, d: i64) -> Operator<F> {
    let mut acc = SparseMatrix::identity(m.nrows());
    for _ in 0..k {
        acc = &acc * m;
    }
    let f = gauss_factorial(v, k, d).inv().expect("quantum factorial is nonzero");
    acc.scale(&f)
}

// ---------------------------------------------------------------------------
// Checks and export
// ---------------------------------------------------------------------------

impl<F: Field> ModuleRep<F> {
    /// Checks weight grading, the commutation relations and the quantum
    /// Serre relations; returns the failures.
    pub fn check_relations(&self) -> Vec<String> {
        let n = self.rank();
        let mut fails = Vec::new();
        for i in 0..n {
            let ai = WeightVec::simple_root(n, i);
            for (m, sign, name) in [(&self.x[i], 1, "x"), (&self.y[i], -1, "y")] {
                for (r, c, _) in m.triplets() {
                    let shift = ai.scale(Rational64::from_integer(sign));
                    if self.weights[r] != &self.weights[c] + &shift {
                        fails.push(format!("{name}_{} breaks the weight grading", i + 1));
                        break;
                    }
                }
            }
        }
        for i in 0..n {
            let t = self.t_pow(i, 1);
            let t_inv = self.t_pow(i, -1);
            let qi = self.q_i(i);
            let qi_inv = qi.inv().expect("nonzero");
            let denom = (qi - &qi_inv).inv().expect("q is not a root of unity");
            for j in 0..n {
                let comm = &(&self.x[i] * &self.y[j]) - &(&self.y[j] * &self.x[i]);
                let expect = if i == j {
                    (&t - &t_inv).scale(&denom)
                } else {
                    SparseMatrix::zeros(self.dim(), self.dim())
                };
                if comm != expect {
                    fails.push(format!("[x_{}, y_{}] relation fails", i + 1, j + 1));
                }
                if i != j {
                    for (gen, name) in [(&self.x, "x"), (&self.y, "y")] {
                        if !self.serre(gen, i, j).is_zero() {
                            fails.push(format!(
                                "Serre relation in {name}_{}, {name}_{} fails",
                                i + 1,
                                j + 1
                            ));
                        }
                    }
                }
            }
        }
        fails
    }

    /// `sum_k (-1)^k e_i^(1-a-k) e_j e_i^(k)` with `a = a_ij`.
    fn serre(&self, gen: &[Operator<F>], i: usize, j: usize) -> Operator<F> {
        let top = (1 - self.root.a(i, j)) as u32;
        let d = self.root.d(i);
        let mut acc = SparseMatrix::zeros(self.dim(), self.dim());
        for k in 0..=top {
            let left = divided(&gen[i], top - k, &self.v, d);
            let right = divided(&gen[i], k, &self.v, d);
            let term = &(&left * &gen[j]) * &right;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Checks the highest weight structure of a simple module: the
    /// `lambda` weight space is the span of the first basis vector and the
    /// joint kernel of the `x_i` is exactly that line.
    pub fn check_highest_weight(&self) -> Vec<String> {
        let mut fails = Vec::new();
        let top: Vec<usize> = (0..self.dim())
            .filter(|&b| self.weights[b] == self.highest)
            .collect();
        if top != vec![0] {
            fails.push(format!("lambda weight space is spanned by {top:?}"));
        }
        let rows: Vec<Vec<F>> = self.x.iter().flat_map(|m| m.to_dense()).collect();
        let ker = crate::linalg::nullspace(rows, self.dim());
        let top_line = ker.len() == 1
            && ker[0].iter().enumerate().all(|(b, c)| (b == 0) != c.is_zero());
        if !top_line {
            fails.push(format!("joint kernel of the x_i has dimension {}", ker.len()));
        }
        if let Ok(dim) = self.root.weyl_dimension(&self.highest) {
            if dim != self.dim().into() {
                fails.push(format!("dimension {} differs from the Weyl dimension {dim}", self.dim()));
            }
        }
        fails
    }

    /// JSON export: basis weights and generator triplets.
    pub fn to_json(&self) -> Value {
        let mats = |ms: &[Operator<F>]| -> Value {
            ms.iter()
                .map(|m| {
                    m.triplets()
                        .map(|(r, c, x)| json!([r, c, x.to_string()]))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "root": self.root.name(),
            "highest": self.highest,
            "dim": self.dim(),
            "weights": self.weights,
            "x": mats(&self.x),
            "y": mats(&self.y),
        })
    }
}

