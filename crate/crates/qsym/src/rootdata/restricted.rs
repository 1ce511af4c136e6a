//! Restricted roots, the restricted Weyl group and the lattices `P(2 Sigma)`,
//! `P+_Theta`, `N` and `Q(2 Sigma)`.

use std::collections::{BTreeSet, VecDeque};

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::involution::InvolutionDatum;
use super::weight::WeightVec;
use crate::error::{Error, Result};
use crate::linalg::smith_invariants;

/// The restricted root system of an involution together with its lattices.
#[derive(Clone, Debug)]
pub struct RestrictedData {
    inv: InvolutionDatum,
    simple_nodes: Vec<usize>,
    simple: Vec<WeightVec>,
    gram_inv: Vec<Vec<Rational64>>,
    positive: Vec<WeightVec>,
    positive_coords: Vec<Vec<i64>>,
    delta: WeightVec,
    p2sigma_roots: Vec<WeightVec>,
}

impl RestrictedData {
    pub fn new(inv: &InvolutionDatum) -> Result<Self> {
        let rd = inv.root();
        let simple_nodes = inv.pi_star();
        let simple: Vec<WeightVec> = simple_nodes
            .iter()
            .map(|&i| inv.tilde(&WeightVec::simple_root(inv.rank(), i)))
            .collect::<Result<_>>()?;
        let k = simple.len();
        let gram: Vec<Vec<Rational64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| rd.inner_unchecked(a, b)).collect())
            .collect();
        let gram_inv = invert_rational(&gram)
            .ok_or_else(|| Error::Invalid("simple restricted roots are dependent".into()))?;
        let fixed = inv.theta_fixed_roots();
        let mut set: BTreeSet<WeightVec> = BTreeSet::new();
        for beta in rd.positive_roots() {
            if fixed.contains(beta) {
                continue;
            }
            let t = inv.tilde(&WeightVec::from_ints(beta))?;
            set.insert(t);
        }
        let mut data = RestrictedData {
            inv: inv.clone(),
            simple_nodes,
            simple,
            gram_inv,
            positive: Vec::new(),
            positive_coords: Vec::new(),
            delta: WeightVec::zero(inv.rank()),
            p2sigma_roots: Vec::new(),
        };
        let mut positive = Vec::new();
        let mut coords = Vec::new();
        for t in set {
            let c = data
                .simple_coords(&t)
                .and_then(|c| c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect::<Option<Vec<i64>>>())
                .ok_or_else(|| Error::TheoremViolation(format!("restricted root {t} is not an integer combination of simple restricted roots")))?;
            if c.iter().all(|&x| x >= 0) {
                positive.push(t);
                coords.push(c);
            } else if c.iter().all(|&x| x <= 0) {
                positive.push(-&t);
                coords.push(c.iter().map(|x| -x).collect());
            } else {
                return Err(Error::TheoremViolation(format!(
                    "restricted root {t} has mixed signs"
                )));
            }
        }
        let mut order: Vec<usize> = (0..positive.len()).collect();
        order.sort_by_key(|&i| (coords[i].iter().sum::<i64>(), coords[i].clone()));
        order.dedup_by_key(|&mut i| coords[i].clone());
        data.positive = order.iter().map(|&i| positive[i].clone()).collect();
        data.positive_coords = order.iter().map(|&i| coords[i].clone()).collect();
        let mut delta = WeightVec::zero(inv.rank());
        for b in &data.positive {
            if !data.is_divisible(b) {
                delta = &delta + b;
            }
        }
        data.delta = delta.scale(Rational64::new(1, 2));
        data.p2sigma_roots = data
            .simple
            .iter()
            .map(|a| {
                let two = a.scale(Rational64::from_integer(2));
                if data.is_restricted_root(&two) {
                    two
                } else {
                    a.clone()
                }
            })
            .collect();
        debug_assert_eq!(k, data.p2sigma_roots.len());
        Ok(data)
    }

    pub fn involution(&self) -> &InvolutionDatum {
        &self.inv
    }

    /// The rank of the restricted root system.
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// The `pi*` nodes indexing the simple restricted roots.
    pub fn simple_nodes(&self) -> &[usize] {
        &self.simple_nodes
    }

    /// The simple restricted roots `alpha~_i`, one per `pi*` node.
    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple
    }

    /// Positive restricted roots, sorted by height.
    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.positive
    }

    /// Positive restricted roots in the basis of simple restricted roots.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_coords
    }

    /// The full restricted root system.
    pub fn roots(&self) -> Vec<WeightVec> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|b| -b))
            .collect()
    }

    pub fn is_restricted_root(&self, w: &WeightVec) -> bool {
        self.positive.iter().any(|b| b == w || &(-b) == w)
    }

    /// True when `beta / 2` is also a restricted root.
    pub fn is_divisible(&self, beta: &WeightVec) -> bool {
        self.is_restricted_root(&beta.scale(Rational64::new(1, 2)))
    }

    /// Half the sum of the positive indivisible restricted roots.
    pub fn delta(&self) -> &WeightVec {
        &self.delta
    }

    fn inner(&self, a: &WeightVec, b: &WeightVec) -> Rational64 {
        self.inv.root().inner_unchecked(a, b)
    }

    /// Coordinates of `w` in the basis of simple restricted roots, or
    /// `None` when `w` lies outside their span.
    pub fn simple_coords(&self, w: &WeightVec) -> Option<Vec<Rational64>> {
        let pairings: Vec<Rational64> = self.simple.iter().map(|a| self.inner(w, a)).collect();
        let c: Vec<Rational64> = self
            .gram_inv
            .iter()
            .map(|row| row.iter().zip(&pairings).map(|(g, p)| g * p).sum())
            .collect();
        let mut back = WeightVec::zero(w.len());
        for (ci, a) in c.iter().zip(&self.simple) {
            back = &back + &a.scale(*ci);
        }
        (&back == w).then_some(c)
    }

    /// `beta <=_r gamma`: `gamma~ - beta~` is a nonnegative integer
    /// combination of simple restricted roots.
    pub fn leq_r(&self, beta: &WeightVec, gamma: &WeightVec) -> Result<bool> {
        let diff = &self.inv.tilde(gamma)? - &self.inv.tilde(beta)?;
        Ok(match self.simple_coords(&diff) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        })
    }

    /// `beta <_r gamma`: `beta <=_r gamma` with distinct tildes.
    pub fn lt_r(&self, beta: &WeightVec, gamma: &WeightVec) -> Result<bool> {
        Ok(self.leq_r(beta, gamma)? && self.inv.tilde(beta)? != self.inv.tilde(gamma)?)
    }

    /// The reflection in the `i`-th simple restricted root.
    pub fn reflect(&self, i: usize, beta: &WeightVec) -> WeightVec {
        let a = &self.simple[i];
        let c = Rational64::from_integer(2) * self.inner(beta, a) / self.inner(a, a);
        beta - &a.scale(c)
    }

    /// The matrix of the `i`-th simple reflection acting on simple-root
    /// coordinates; column `j` is the image of `alpha_j`.
    pub fn reflection_matrix(&self, i: usize) -> Vec<Vec<Rational64>> {
        let n = self.inv.rank();
        let cols: Vec<WeightVec> = (0..n)
            .map(|j| self.reflect(i, &WeightVec::simple_root(n, j)))
            .collect();
        (0..n)
            .map(|r| cols.iter().map(|c| c.coords()[r]).collect())
            .collect()
    }

    /// The orbit of `w` under the restricted Weyl group, by closure under
    /// simple reflections. Errors once the orbit exceeds `cap` elements.
    pub fn weyl_orbit(&self, w: &WeightVec, cap: usize) -> Result<Vec<WeightVec>> {
        let mut seen: BTreeSet<WeightVec> = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.reflect(i, &x);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ResourceCap(format!(
                            "Weyl orbit of {w} exceeds {cap} elements"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Membership in `P+_Theta` by its defining conditions: `lambda` is
    /// orthogonal to the `Theta`-fixed subspace and
    /// `(lambda~, beta~) / (beta~, beta~)` is an integer for every
    /// restricted root.
    pub fn in_p_plus_theta(&self, lambda: &WeightVec) -> Result<bool> {
        self.inv.root().dominant_coords(lambda)?;
        for f in self.inv.fixed_space_spanning_set() {
            if !self.inner(lambda, &f).is_zero() {
                return Ok(false);
            }
        }
        let lt = self.inv.tilde(lambda)?;
        for b in &self.positive {
            if !(self.inner(&lt, b) / self.inner(b, b)).is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in `P(2 Sigma) ∩ P+(Sigma)`: `lambda` lies in the span
    /// of the restricted roots and is a nonnegative integer combination of
    /// the fundamental weights of `2 Sigma`.
    pub fn in_p2sigma_dominant(&self, lambda: &WeightVec) -> bool {
        if self.simple_coords(lambda).is_none() {
            return false;
        }
        self.p2sigma_roots.iter().all(|g| {
            let c = self.inner(lambda, g) / self.inner(g, g);
            c.is_integer() && !c.is_negative()
        })
    }

    /// Membership in `P(2 Sigma)`: `lambda` lies in the span of the
    /// restricted roots and pairs integrally with the coroots of `2 Sigma`.
    pub fn in_p2sigma(&self, lambda: &WeightVec) -> bool {
        self.simple_coords(lambda).is_some()
            && self.p2sigma_coords(lambda).iter().all(|c| c.is_integer())
    }

    /// Coordinates of `lambda` in the basis of fundamental weights of
    /// `2 Sigma`, for `lambda` in the span of the restricted roots.
    pub fn p2sigma_coords(&self, lambda: &WeightVec) -> Vec<Rational64> {
        self.p2sigma_roots
            .iter()
            .map(|g| self.inner(lambda, g) / self.inner(g, g))
            .collect()
    }

    /// Every `lambda` in `P+_Theta` with `dim L(lambda) <= bound`, sorted
    /// by dimension.
    pub fn enumerate_p_plus_theta(&self, bound: u64) -> Vec<(WeightVec, u64)> {
        self.inv
            .root()
            .dominant_weights_up_to(bound)
            .into_iter()
            .filter(|(w, _)| self.in_p_plus_theta(w).expect("dominant"))
            .collect()
    }

    /// Generators of the monoid `N`: `2 alpha~_i` for `pi*` nodes outside
    /// `S` and `alpha~_i` for nodes in `S`.
    pub fn n_generators(&self) -> Vec<WeightVec> {
        self.simple_nodes
            .iter()
            .zip(&self.simple)
            .map(|(i, a)| {
                if self.inv.s_set().contains(i) {
                    a.clone()
                } else {
                    a.scale(Rational64::from_integer(2))
                }
            })
            .collect()
    }

    /// Coordinates in the generators of `N`, when `w` lies in their span.
    pub fn n_coords(&self, w: &WeightVec) -> Option<Vec<Rational64>> {
        let c = self.simple_coords(w)?;
        Some(
            c.iter()
                .zip(&self.simple_nodes)
                .map(|(x, i)| {
                    if self.inv.s_set().contains(i) {
                        *x
                    } else {
                        x / Rational64::from_integer(2)
                    }
                })
                .collect(),
        )
    }

    /// Membership in the monoid `N`.
    pub fn in_monoid_n(&self, w: &WeightVec) -> bool {
        self.n_coords(w)
            .is_some_and(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Membership in the lattice generated by `N`.
    pub fn in_lattice_n(&self, w: &WeightVec) -> bool {
        self.n_coords(w)
            .is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    /// Generators of `Q(2 Sigma)`: twice the positive restricted roots.
    pub fn q2sigma_generators(&self) -> Vec<WeightVec> {
        self.positive
            .iter()
            .map(|b| b.scale(Rational64::from_integer(2)))
            .collect()
    }

    /// Membership in `Q(2 Sigma)`. The simple restricted roots are
    /// restricted roots, so `Q(2 Sigma)` consists of the even integer
    /// combinations of them.
    pub fn in_q2sigma(&self, w: &WeightVec) -> bool {
        self.simple_coords(w).is_some_and(|c| {
            c.iter()
                .all(|x| (x / Rational64::from_integer(2)).is_integer())
        })
    }

    /// The invariant factors (other than one) of `N / Q(2 Sigma)`.
    pub fn n_mod_q2sigma(&self) -> Vec<i64> {
        let rows: Vec<Vec<i64>> = self
            .q2sigma_generators()
            .iter()
            .map(|g| {
                self.n_coords(g)
                    .expect("Q(2 Sigma) lies in span N")
                    .iter()
                    .map(|x| {
                        assert!(x.is_integer(), "Q(2 Sigma) lies in N");
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();
        let mut inv = smith_invariants(&rows);
        let rank = inv.len();
        inv.retain(|&d| d != 1);
        inv.extend(std::iter::repeat_n(0, self.rank() - rank));
        inv
    }

    /// For `alpha_i` in `S`: `2 (alpha~_i / 2, beta~) / (beta~, beta~)` is an
    /// integer for every restricted root.
    pub fn lemma_half_root_integrality(&self) -> bool {
        self.simple_nodes
            .iter()
            .zip(&self.simple)
            .filter(|(i, _)| self.inv.s_set().contains(i))
            .all(|(_, a)| {
                let half = a.scale(Rational64::new(1, 2));
                self.positive.iter().all(|b| {
                    (Rational64::from_integer(2) * self.inner(&half, b) / self.inner(b, b))
                        .is_integer()
                })
            })
    }

    /// Checks the invariants of the restricted data; returns the failures.
    pub fn validate(&self) -> Vec<String> {
        let mut fails = Vec::new();
        let roots: BTreeSet<WeightVec> = self.roots().into_iter().collect();
        for i in 0..self.rank() {
            let image: BTreeSet<WeightVec> = roots.iter().map(|b| self.reflect(i, b)).collect();
            if image != roots {
                fails.push(format!("reflection {} does not permute Sigma", i + 1));
            }
            if self.reflect(i, &self.delta) != &self.delta - &self.simple[i] {
                fails.push(format!("s~_{}(delta) != delta - alpha~_{}", i + 1, i + 1));
            }
        }
        if !self.lemma_half_root_integrality() {
            fails.push("alpha~_i / 2 is not in P(Sigma) for some alpha_i in S".into());
        }
        let factors = self.n_mod_q2sigma();
        let expected = vec![2; self.inv.s_set().len()];
        if factors != expected {
            fails.push(format!("N / Q(2 Sigma) has invariant factors {factors:?}"));
        }
        fails
    }
}

fn invert_rational(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Rational64::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
