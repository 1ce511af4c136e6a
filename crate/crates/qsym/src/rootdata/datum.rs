//! Cartan data, root systems and weights of semisimple Lie algebras.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::weight::{to_big, WeightVec};
use crate::error::{Error, Result};

/// Cartan-Killing type of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    /// Checks that the type exists in rank `n`.
    pub fn check_rank(self, n: usize) -> Result<()> {
        let ok = match self {
            CartanType::A => n >= 1,
            CartanType::B | CartanType::C => n >= 2,
            CartanType::D => n >= 4,
            CartanType::E => (6..=8).contains(&n),
            CartanType::F => n == 4,
            CartanType::G => n == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(format!("no simple Lie algebra of type {self}{n}")))
        }
    }

    /// Number of positive roots of the simple algebra of rank `n`.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanType::F => 24,
            CartanType::G => 6,
        }
    }

    /// Cartan matrix `a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)` and
    /// symmetrizers `d_i = (alpha_i, alpha_i) / 2`, short roots of squared
    /// length two, in the Bourbaki numbering.
    fn cartan(self, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        };
        let mut d = vec![1i64; n];
        match self {
            CartanType::A => (1..n).for_each(|i| link(i, i + 1)),
            CartanType::B => {
                (1..n).for_each(|i| link(i, i + 1));
                a[n - 1][n - 2] = -2;
                d = vec![2; n];
                d[n - 1] = 1;
            }
            CartanType::C => {
                (1..n).for_each(|i| link(i, i + 1));
                a[n - 2][n - 1] = -2;
                d[n - 1] = 2;
            }
            CartanType::D => {
                (1..n - 1).for_each(|i| link(i, i + 1));
                link(n - 2, n);
            }
            CartanType::E => {
                link(1, 3);
                link(2, 4);
                (3..n).for_each(|i| link(i, i + 1));
            }
            CartanType::F => {
                link(1, 2);
                link(2, 3);
                link(3, 4);
                a[2][1] = -2;
                d = vec![2, 2, 1, 1];
            }
            CartanType::G => {
                link(1, 2);
                a[0][1] = -3;
                d = vec![1, 3];
            }
        }
        (a, d)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            _ => return Err(Error::Parse(format!("unknown Cartan type `{s}`"))),
        })
    }
}

/// The root datum of a semisimple Lie algebra, given as a direct sum of
/// simple components. Nodes are 0-based internally.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    components: Vec<(CartanType, usize)>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    gram: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    fundamental: Vec<WeightVec>,
    rho: WeightVec,
}

impl RootDatum {
    /// The simple root system of type `ty` and rank `n`.
    pub fn simple(ty: CartanType, n: usize) -> Result<Self> {
        Self::from_components(&[(ty, n)])
    }

    /// The direct sum of simple root systems, nodes numbered consecutively.
    pub fn from_components(components: &[(CartanType, usize)]) -> Result<Self> {
        let n: usize = components.iter().map(|c| c.1).sum();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut sym = Vec::with_capacity(n);
        let mut off = 0;
        for &(ty, k) in components {
            ty.check_rank(k)?;
            let (a, d) = ty.cartan(k);
            for i in 0..k {
                for j in 0..k {
                    cartan[off + i][off + j] = a[i][j];
                }
            }
            sym.extend(d);
            off += k;
        }
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| sym[i] * cartan[i][j]).collect())
            .collect();
        let positive = positive_roots(&cartan);
        let inv = inverse(&cartan);
        let fundamental: Vec<WeightVec> = (0..n)
            .map(|i| WeightVec::new((0..n).map(|j| inv[j][i]).collect()))
            .collect();
        let mut rho = WeightVec::zero(n);
        for w in &fundamental {
            rho = &rho + w;
        }
        Ok(RootDatum {
            components: components.to_vec(),
            cartan,
            sym,
            gram,
            positive,
            fundamental,
            rho,
        })
    }

    pub fn rank(&self) -> usize {
        self.sym.len()
    }

    pub fn components(&self) -> &[(CartanType, usize)] {
        &self.components
    }

    /// Name such as `A2` or `A1+A1`.
    pub fn name(&self) -> String {
        self.components
            .iter()
            .map(|(t, k)| format!("{t}{k}"))
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `a_ij`, 0-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// The symmetrizers `d_i = (alpha_i, alpha_i) / 2`.
    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn d(&self, i: usize) -> i64 {
        self.sym[i]
    }

    /// `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// The Cartan inner product.
    pub fn inner(&self, b: &WeightVec, c: &WeightVec) -> Result<Rational64> {
        b.check_rank(self.rank())?;
        c.check_rank(self.rank())?;
        Ok(self.inner_unchecked(b, c))
    }

    pub(crate) fn inner_unchecked(&self, b: &WeightVec, c: &WeightVec) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, bi) in b.coords().iter().enumerate() {
            if bi.is_zero() {
                continue;
            }
            for (j, cj) in c.coords().iter().enumerate() {
                if self.gram[i][j] != 0 && !cj.is_zero() {
                    acc += bi * cj * self.gram[i][j];
                }
            }
        }
        acc
    }

    /// `<beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i)`.
    pub fn coroot_pairing(&self, b: &WeightVec, i: usize) -> Rational64 {
        b.coords()
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.cartan[i][j])
            .sum()
    }

    /// Positive roots as integer coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All roots as weight vectors: positive roots followed by their
    /// negatives.
    pub fn roots(&self) -> Vec<WeightVec> {
        let pos: Vec<WeightVec> = self.positive.iter().map(|r| WeightVec::from_ints(r)).collect();
        let neg: Vec<WeightVec> = pos.iter().map(|r| -r).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// The set of all roots, as integer coordinate vectors.
    pub fn root_set(&self) -> HashSet<Vec<i64>> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|r| r.iter().map(|x| -x).collect()))
            .collect()
    }

    /// The number of positive roots expected from the classification.
    pub fn expected_positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|&(t, k)| t.positive_root_count(k))
            .sum()
    }

    pub fn fundamental_weights(&self) -> &[WeightVec] {
        &self.fundamental
    }

    pub fn rho(&self) -> &WeightVec {
        &self.rho
    }

    /// The weight `sum_i c_i omega_i`.
    pub fn from_fundamental(&self, coords: &[i64]) -> Result<WeightVec> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let mut w = WeightVec::zero(self.rank());
        for (c, om) in coords.iter().zip(&self.fundamental) {
            w = &w + &om.scale(Rational64::from_integer(*c));
        }
        Ok(w)
    }

    /// Coordinates `<lambda, alpha_i^vee>` in the fundamental weight basis.
    pub fn to_fundamental(&self, w: &WeightVec) -> Vec<Rational64> {
        (0..self.rank()).map(|i| self.coroot_pairing(w, i)).collect()
    }

    /// Integer fundamental coordinates when `w` is dominant integral.
    pub fn dominant_coords(&self, w: &WeightVec) -> Result<Vec<i64>> {
        w.check_rank(self.rank())?;
        self.to_fundamental(w)
            .into_iter()
            .map(|c| {
                if c.is_integer() && c >= Rational64::zero() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotDominant(w.to_string()))
                }
            })
            .collect()
    }

    /// True when `w` lies in the weight lattice.
    pub fn is_integral_weight(&self, w: &WeightVec) -> bool {
        self.to_fundamental(w).iter().all(|c| c.is_integer())
    }

    /// The Weyl dimension `prod_{beta > 0} (lambda + rho, beta) / (rho, beta)`.
    pub fn weyl_dimension(&self, lambda: &WeightVec) -> Result<BigInt> {
        self.dominant_coords(lambda)?;
        let shifted = lambda + &self.rho;
        let mut acc = BigRational::one();
        for beta in &self.positive {
            let b = WeightVec::from_ints(beta);
            let num = to_big(self.inner_unchecked(&shifted, &b));
            let den = to_big(self.inner_unchecked(&self.rho, &b));
            acc = acc * num / den;
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }

    /// All dominant integral weights with Weyl dimension at most `bound`,
    /// sorted by dimension and then by fundamental coordinates.
    pub fn dominant_weights_up_to(&self, bound: u64) -> Vec<(WeightVec, u64)> {
        let n = self.rank();
        let bound_big = BigInt::from(bound);
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([vec![0i64; n]]);
        seen.insert(vec![0; n]);
        while let Some(c) = queue.pop_front() {
            let w = self.from_fundamental(&c).expect("rank matches");
            let dim = self.weyl_dimension(&w).expect("dominant");
            if dim > bound_big {
                continue;
            }
            out.push((c.clone(), w, dim.to_u64().expect("bounded")));
            for i in 0..n {
                let mut next = c.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.sort_by(|a, b| (a.2, &a.0).cmp(&(b.2, &b.0)));
        out.into_iter().map(|(_, w, d)| (w, d)).collect()
    }
}

/// Positive roots by the root-string algorithm, sorted by height and then
/// lexicographically.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        level.sort();
        level.dedup();
        for r in &level {
            all.insert(r.clone());
        }
        out.extend(level.iter().cloned());
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                // p = largest k with beta - k alpha_i a root.
                let mut p = 0;
                loop {
                    let mut g = beta.clone();
                    g[i] -= p + 1;
                    if all.contains(&g) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut g = beta.clone();
                    g[i] += 1;
                    next.push(g);
                }
            }
        }
        level = next;
    }
    out
}

/// Inverse of an integer matrix over the rationals.
fn inverse(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Rational64::from_integer(a[i][j])
                    } else {
                        Rational64::from_integer(i64::from(j - n == i))
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("nonsingular");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= f * p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}
