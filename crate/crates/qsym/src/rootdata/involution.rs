//! The classification table of maximally split involutions.
//!
//! Each row records the fixed nodes `pi_Theta`, the diagram permutation
//! `p`, the distinguished node sets `S` and `D`, and for every node of
//! `pi*` (nodes outside `pi_Theta` with `i <= p(i)`) the sequence of
//! adjoint operators producing `theta~(y_i)` from `t_{p(i)}^{-1} x_{p(i)}`.
//! The involution `Theta` on the weight space is derived from this data.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};

use super::datum::{CartanType, RootDatum};
use super::weight::WeightVec;
use crate::error::{Error, Result};

/// The row label of a symmetric pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairType {
    AI,
    AII,
    AIII1,
    AIII2,
    AIV,
    BI,
    BII,
    CI,
    CII1,
    CII2,
    DI1,
    DI2,
    DI3,
    DII,
    DIII1,
    DIII2,
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
    /// `g = g_1 + g_2` with the involution swapping the two copies of a
    /// simple algebra of the given type.
    Double(CartanType),
}

impl PairType {
    /// Every simple-algebra row label.
    pub const SIMPLE: [PairType; 28] = [
        PairType::AI,
        PairType::AII,
        PairType::AIII1,
        PairType::AIII2,
        PairType::AIV,
        PairType::BI,
        PairType::BII,
        PairType::CI,
        PairType::CII1,
        PairType::CII2,
        PairType::DI1,
        PairType::DI2,
        PairType::DI3,
        PairType::DII,
        PairType::DIII1,
        PairType::DIII2,
        PairType::EI,
        PairType::EII,
        PairType::EIII,
        PairType::EIV,
        PairType::EV,
        PairType::EVI,
        PairType::EVII,
        PairType::EVIII,
        PairType::EIX,
        PairType::FI,
        PairType::FII,
        PairType::G,
    ];

    /// True for the row families that take the extra integer `r`.
    pub fn takes_r(self) -> bool {
        matches!(
            self,
            PairType::AIII1 | PairType::BI | PairType::CII1 | PairType::DI1
        )
    }

    /// The fixed rank of the exceptional rows.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            PairType::EI | PairType::EII | PairType::EIII | PairType::EIV => Some(6),
            PairType::EV | PairType::EVI | PairType::EVII => Some(7),
            PairType::EVIII | PairType::EIX => Some(8),
            PairType::FI | PairType::FII => Some(4),
            PairType::G => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairType::AIII1 => "AIII.1",
            PairType::AIII2 => "AIII.2",
            PairType::CII1 => "CII.1",
            PairType::CII2 => "CII.2",
            PairType::DI1 => "DI.1",
            PairType::DI2 => "DI.2",
            PairType::DI3 => "DI.3",
            PairType::DIII1 => "DIII.1",
            PairType::DIII2 => "DIII.2",
            PairType::Double(t) => return write!(f, "DOUBLE({t})"),
            other => return write!(f, "{other:?}"),
        };
        f.write_str(s)
    }
}

impl FromStr for PairType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if let Some(inner) = t.strip_prefix("DOUBLE(").and_then(|x| x.strip_suffix(')')) {
            return Ok(PairType::Double(inner.parse()?));
        }
        if let Some(inner) = t.strip_prefix("DOUBLE-") {
            return Ok(PairType::Double(inner.parse()?));
        }
        PairType::SIMPLE
            .iter()
            .copied()
            .find(|p| p.to_string() == t || format!("{p:?}").to_ascii_uppercase() == t)
            .ok_or_else(|| Error::Parse(format!("unknown pair type `{s}`")))
    }
}

/// One adjoint factor `(ad_r x_node^(power))` of a sequence.
pub type AdFactor = (usize, u32);

/// One row of the classification, instantiated at a rank.
#[derive(Clone, Debug)]
pub struct InvolutionDatum {
    pair: PairType,
    n: usize,
    r: Option<usize>,
    root: RootDatum,
    pi_theta: Vec<usize>,
    p: Vec<usize>,
    s_set: Vec<usize>,
    d_set: Vec<usize>,
    sequences: BTreeMap<usize, Vec<AdFactor>>,
    theta: Vec<WeightVec>,
}

impl PartialEq for InvolutionDatum {
    fn eq(&self, other: &Self) -> bool {
        (self.pair, self.n, self.r) == (other.pair, other.n, other.r)
    }
}

impl Eq for InvolutionDatum {}

/// Builder input with 1-based nodes, matching the printed table.
struct Row {
    root: RootDatum,
    pi_theta: Vec<usize>,
    p: Vec<usize>,
    s_set: Vec<usize>,
    d_set: Vec<usize>,
    sequences: Vec<(usize, Vec<AdFactor>)>,
}

fn seq(nodes: &[usize]) -> Vec<AdFactor> {
    nodes.iter().map(|&k| (k, 1)).collect()
}

fn identity_perm(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn flip_perm(n: usize) -> Vec<usize> {
    (1..=n).map(|i| n + 1 - i).collect()
}

fn invalid(pair: PairType, n: usize, r: Option<usize>) -> Error {
    match r {
        Some(r) => Error::Invalid(format!("{pair} is not defined for n = {n}, r = {r}")),
        None => Error::Invalid(format!("{pair} is not defined for n = {n}")),
    }
}

impl InvolutionDatum {
    /// Instantiates a row of the table. `n` is the rank of the simple
    /// algebra (of each copy, for `DOUBLE`); `r` is required exactly for
    /// the families that take it.
    pub fn new(pair: PairType, n: usize, r: Option<usize>) -> Result<Self> {
        if pair.takes_r() != r.is_some() {
            return Err(invalid(pair, n, r));
        }
        if let Some(fixed) = pair.fixed_rank() {
            if n != fixed {
                return Err(invalid(pair, n, r));
            }
        }
        let row = Self::row(pair, n, r)?;
        Self::from_row(pair, n, r, row)
    }

    /// The sets `S` follow the general definition recomputed from
    /// `Theta`. This differs from the printed rows in three places: AI at
    /// `n = 1`, and BI and DI.1 at `r = 2`, where node 1 is isolated among
    /// the nodes with `Theta(alpha_j) = -alpha_j` and so belongs to `S`.
    fn row(pair: PairType, n: usize, r: Option<usize>) -> Result<Row> {
        use CartanType::*;
        let bad = || invalid(pair, n, r);
        let simple = |t: CartanType| RootDatum::simple(t, n).map_err(|_| bad());
        let split = |t: CartanType| -> Result<Row> {
            Ok(Row {
                root: simple(t)?,
                pi_theta: vec![],
                p: identity_perm(n),
                s_set: vec![],
                d_set: vec![],
                sequences: (1..=n).map(|i| (i, vec![])).collect(),
            })
        };
        let row = match pair {
            PairType::AI => {
                let mut row = split(A)?;
                if n == 1 {
                    row.s_set = vec![1];
                }
                row
            }
            PairType::AII => {
                if n < 3 || n.is_multiple_of(2) {
                    return Err(bad());
                }
                Row {
                    root: simple(A)?,
                    pi_theta: (1..=n).step_by(2).collect(),
                    p: identity_perm(n),
                    s_set: vec![],
                    d_set: vec![],
                    sequences: (2..n).step_by(2).map(|i| (i, seq(&[i - 1, i + 1]))).collect(),
                }
            }
            PairType::AIII1 | PairType::AIV => {
                let r = if pair == PairType::AIV { 1 } else { r.expect("checked") };
                let ok = if pair == PairType::AIV {
                    n >= 2
                } else {
                    r >= 2 && 2 * r <= n
                };
                if !ok {
                    return Err(bad());
                }
                let mut sequences: Vec<(usize, Vec<AdFactor>)> =
                    (1..r).map(|i| (i, vec![])).collect();
                sequences.push((r, seq(&((r + 1)..=(n - r)).collect::<Vec<_>>())));
                Row {
                    root: simple(A)?,
                    pi_theta: ((r + 1)..=(n - r)).collect(),
                    p: flip_perm(n),
                    s_set: vec![],
                    d_set: vec![r],
                    sequences,
                }
            }
            PairType::AIII2 => {
                if n < 3 || n.is_multiple_of(2) {
                    return Err(bad());
                }
                let m = n / 2;
                Row {
                    root: simple(A)?,
                    pi_theta: vec![],
                    p: flip_perm(n),
                    s_set: vec![m + 1],
                    d_set: vec![],
                    sequences: (1..=m + 1).map(|i| (i, vec![])).collect(),
                }
            }
            PairType::BI | PairType::BII => {
                let r = if pair == PairType::BII { 1 } else { r.expect("checked") };
                if n < 2 || (pair == PairType::BI && !(2..=n).contains(&r)) {
                    return Err(bad());
                }
                let mut s: Vec<AdFactor> = ((r + 1)..n).map(|k| (k, 1)).collect();
                if r < n {
                    s.push((n, 2));
                }
                s.extend(((r + 1)..n).rev().map(|k| (k, 1)));
                let mut sequences: Vec<(usize, Vec<AdFactor>)> =
                    (1..r).map(|i| (i, vec![])).collect();
                sequences.push((r, s));
                Row {
                    root: simple(B)?,
                    pi_theta: ((r + 1)..=n).collect(),
                    p: identity_perm(n),
                    s_set: if r == 2 { vec![1] } else { vec![] },
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::CI => {
                if n == 1 {
                    // C_1 is sl2; the row coincides with AI at n = 1.
                    let mut row = Self::row(PairType::AI, 1, None)?;
                    row.s_set = vec![1];
                    row
                } else {
                    let mut row = split(C)?;
                    row.s_set = vec![n];
                    row
                }
            }
            PairType::CII1 => {
                let r = r.expect("checked");
                if n < 3 || r < 2 || r % 2 == 1 || r > n - 1 {
                    return Err(bad());
                }
                let mut pi_theta: Vec<usize> = (1..r).step_by(2).collect();
                pi_theta.extend((r + 1)..=n);
                let mut sequences: Vec<(usize, Vec<AdFactor>)> = (2..r)
                    .step_by(2)
                    .map(|i| (i, seq(&[i - 1, i + 1])))
                    .collect();
                let mut s = vec![r - 1];
                s.extend((r + 1)..n);
                s.push(n);
                s.extend(((r + 1)..n).rev());
                sequences.push((r, seq(&s)));
                Row {
                    root: simple(C)?,
                    pi_theta,
                    p: identity_perm(n),
                    s_set: vec![],
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::CII2 => {
                if n < 2 || n % 2 == 1 {
                    return Err(bad());
                }
                let mut sequences: Vec<(usize, Vec<AdFactor>)> = (2..n)
                    .step_by(2)
                    .map(|i| (i, seq(&[i - 1, i + 1])))
                    .collect();
                sequences.push((n, vec![(n - 1, 2)]));
                Row {
                    root: simple(C)?,
                    pi_theta: (1..n).step_by(2).collect(),
                    p: identity_perm(n),
                    s_set: vec![],
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::DI1 | PairType::DII => {
                let r = if pair == PairType::DII { 1 } else { r.expect("checked") };
                if n < 4 || (pair == PairType::DI1 && !(2..=n - 2).contains(&r)) {
                    return Err(bad());
                }
                let mut s: Vec<usize> = ((r + 1)..=(n - 2)).collect();
                s.push(n - 1);
                s.push(n);
                s.extend(((r + 1)..=(n - 2)).rev());
                let mut sequences: Vec<(usize, Vec<AdFactor>)> =
                    (1..r).map(|i| (i, vec![])).collect();
                sequences.push((r, seq(&s)));
                Row {
                    root: simple(D)?,
                    pi_theta: ((r + 1)..=n).collect(),
                    p: identity_perm(n),
                    s_set: if r == 2 { vec![1] } else { vec![] },
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::DI2 => {
                let mut row = split(D)?;
                row.p.swap(n - 2, n - 1);
                row.sequences.pop();
                row
            }
            PairType::DI3 => split(D)?,
            PairType::DIII1 => {
                if n < 4 || n % 2 == 1 {
                    return Err(bad());
                }
                let mut sequences: Vec<(usize, Vec<AdFactor>)> = (2..n - 1)
                    .step_by(2)
                    .map(|i| (i, seq(&[i - 1, i + 1])))
                    .collect();
                sequences.push((n, vec![]));
                Row {
                    root: simple(D)?,
                    pi_theta: (1..n).step_by(2).collect(),
                    p: identity_perm(n),
                    s_set: vec![n],
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::DIII2 => {
                if n < 5 || n.is_multiple_of(2) {
                    return Err(bad());
                }
                let mut sequences: Vec<(usize, Vec<AdFactor>)> = (2..n - 2)
                    .step_by(2)
                    .map(|i| (i, seq(&[i - 1, i + 1])))
                    .collect();
                sequences.push((n - 1, seq(&[n - 2])));
                let mut p = identity_perm(n);
                p.swap(n - 2, n - 1);
                Row {
                    root: simple(D)?,
                    pi_theta: (1..n - 1).step_by(2).collect(),
                    p,
                    s_set: vec![],
                    d_set: vec![n - 1],
                    sequences,
                }
            }
            PairType::EI | PairType::EV | PairType::EVIII => split(E)?,
            PairType::EII => {
                let mut row = split(E)?;
                row.p = vec![6, 2, 5, 4, 3, 1];
                row.sequences = vec![(1, vec![]), (2, vec![]), (3, vec![]), (4, vec![])];
                row
            }
            PairType::EIII => Row {
                root: simple(E)?,
                pi_theta: vec![3, 4, 5],
                p: vec![6, 2, 5, 4, 3, 1],
                s_set: vec![],
                d_set: vec![1],
                sequences: vec![(1, seq(&[3, 4, 5])), (2, seq(&[4, 3, 5, 4]))],
            },
            PairType::EIV => Row {
                root: simple(E)?,
                pi_theta: vec![2, 3, 4, 5],
                p: identity_perm(6),
                s_set: vec![],
                d_set: vec![],
                sequences: vec![
                    (1, seq(&[3, 4, 5, 2, 4, 3])),
                    (6, seq(&[5, 4, 3, 2, 4, 5])),
                ],
            },
            PairType::EVI => Row {
                root: simple(E)?,
                pi_theta: vec![2, 5, 7],
                p: identity_perm(7),
                s_set: vec![],
                d_set: vec![],
                sequences: vec![
                    (1, vec![]),
                    (3, vec![]),
                    (4, seq(&[2, 5])),
                    (6, seq(&[7, 5])),
                ],
            },
            PairType::EVII | PairType::EIX => {
                let mut sequences = vec![
                    (1, seq(&[3, 4, 2, 5, 4, 3])),
                    (6, seq(&[5, 4, 2, 3, 4, 5])),
                    (7, vec![]),
                ];
                if n == 8 {
                    sequences.push((8, vec![]));
                }
                Row {
                    root: simple(E)?,
                    pi_theta: vec![2, 3, 4, 5],
                    p: identity_perm(n),
                    s_set: if n == 7 { vec![7] } else { vec![] },
                    d_set: vec![],
                    sequences,
                }
            }
            PairType::FI => split(F)?,
            PairType::FII => Row {
                root: simple(F)?,
                pi_theta: vec![1, 2, 3],
                p: identity_perm(4),
                s_set: vec![],
                d_set: vec![],
                sequences: vec![(4, seq(&[3, 2, 1, 3, 2, 3]))],
            },
            PairType::G => split(G)?,
            PairType::Double(t) => {
                let root = RootDatum::from_components(&[(t, n), (t, n)]).map_err(|_| bad())?;
                let p = (1..=n).map(|i| i + n).chain(1..=n).collect();
                Row {
                    root,
                    pi_theta: vec![],
                    p,
                    s_set: vec![],
                    d_set: vec![],
                    sequences: (1..=n).map(|i| (i, vec![])).collect(),
                }
            }
        };
        Ok(row)
    }

    fn from_row(pair: PairType, n: usize, r: Option<usize>, row: Row) -> Result<Self> {
        let rank = row.root.rank();
        let zb = |v: &[usize]| -> Vec<usize> { v.iter().map(|&i| i - 1).collect() };
        let pi_theta = zb(&row.pi_theta);
        let p = zb(&row.p);
        let sequences: BTreeMap<usize, Vec<AdFactor>> = row
            .sequences
            .iter()
            .map(|(i, s)| (i - 1, s.iter().map(|&(k, m)| (k - 1, m)).collect()))
            .collect();
        let mut theta = Vec::with_capacity(rank);
        for i in 0..rank {
            if pi_theta.contains(&i) {
                theta.push(WeightVec::simple_root(rank, i));
                continue;
            }
            let (rep, seq) = if i <= p[i] {
                (i, sequences.get(&i))
            } else {
                (p[i], sequences.get(&p[i]))
            };
            let seq = seq.ok_or_else(|| {
                Error::Invalid(format!("{pair}: no sequence for node {}", rep + 1))
            })?;
            let mut coords = vec![0i64; rank];
            coords[p[i]] -= 1;
            for &(k, m) in seq {
                coords[k] -= i64::from(m);
            }
            theta.push(WeightVec::from_ints(&coords));
        }
        Ok(InvolutionDatum {
            pair,
            n,
            r,
            root: row.root,
            pi_theta,
            p,
            s_set: zb(&row.s_set),
            d_set: zb(&row.d_set),
            sequences,
            theta,
        })
    }

    pub fn pair(&self) -> PairType {
        self.pair
    }

    /// The rank parameter used to instantiate the row.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> Option<usize> {
        self.r
    }

    /// A label such as `AIII.1 A5 r=2`.
    pub fn name(&self) -> String {
        match self.r {
            Some(r) => format!("{} {} r={}", self.pair, self.root.name(), r),
            None => format!("{} {}", self.pair, self.root.name()),
        }
    }

    pub fn root(&self) -> &RootDatum {
        &self.root
    }

    pub fn rank(&self) -> usize {
        self.root.rank()
    }

    /// Nodes of `pi_Theta` (0-based).
    pub fn pi_theta(&self) -> &[usize] {
        &self.pi_theta
    }

    pub fn in_pi_theta(&self, i: usize) -> bool {
        self.pi_theta.contains(&i)
    }

    /// The permutation `p` (0-based).
    pub fn p(&self, i: usize) -> usize {
        self.p[i]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.p
    }

    /// The stated set `S` (0-based).
    pub fn s_set(&self) -> &[usize] {
        &self.s_set
    }

    /// The stated set `D` (0-based).
    pub fn d_set(&self) -> &[usize] {
        &self.d_set
    }

    /// Nodes outside `pi_Theta` with `i <= p(i)`.
    pub fn pi_star(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.in_pi_theta(i) && i <= self.p[i])
            .collect()
    }

    /// Nodes outside `pi_Theta`.
    pub fn non_fixed(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.in_pi_theta(i)).collect()
    }

    /// The stored sequences, keyed by `pi*` node.
    pub fn sequences(&self) -> &BTreeMap<usize, Vec<AdFactor>> {
        &self.sequences
    }

    /// The adjoint factors producing `theta~(y_i)` for a node outside
    /// `pi_Theta`, listed as in the printed product (the rightmost factor
    /// acts first), together with the sign. For partner nodes the
    /// sequence is reversed and the sign is `(-1)^(m_1 + ... + m_r)`.
    pub fn ad_sequence(&self, i: usize) -> Result<(Vec<AdFactor>, i64)> {
        if self.in_pi_theta(i) {
            return Err(Error::Invalid(format!("node {} lies in pi_Theta", i + 1)));
        }
        if i <= self.p[i] {
            let s = self.sequences.get(&i).cloned().ok_or_else(|| {
                Error::Invalid(format!("{}: no sequence for node {}", self.name(), i + 1))
            })?;
            Ok((s, 1))
        } else {
            let (mut s, _) = self.ad_sequence(self.p[i])?;
            s.reverse();
            let total: u32 = s.iter().map(|f| f.1).sum();
            Ok((s, if total.is_multiple_of(2) { 1 } else { -1 }))
        }
    }

    /// `Theta(alpha_i)`.
    pub fn theta_simple(&self, i: usize) -> &WeightVec {
        &self.theta[i]
    }

    /// `Theta(beta)`, by linearity.
    pub fn theta(&self, beta: &WeightVec) -> Result<WeightVec> {
        beta.check_rank(self.rank())?;
        Ok(self.theta_unchecked(beta))
    }

    pub(crate) fn theta_unchecked(&self, beta: &WeightVec) -> WeightVec {
        let mut out = WeightVec::zero(self.rank());
        for (c, t) in beta.coords().iter().zip(&self.theta) {
            if !c.is_zero() {
                out = &out + &t.scale(*c);
            }
        }
        out
    }

    /// `beta~ = (beta - Theta(beta)) / 2`.
    pub fn tilde(&self, beta: &WeightVec) -> Result<WeightVec> {
        Ok((beta - &self.theta(beta)?).scale(Rational64::new(1, 2)))
    }

    /// `S` recomputed from `Theta`: nodes `i` of `pi*` with
    /// `Theta(alpha_i) = -alpha_i` such that `2(alpha_i, alpha_j) /
    /// (alpha_j, alpha_j)` is even for every such `j`.
    pub fn computed_s(&self) -> Vec<usize> {
        let minus: Vec<usize> = (0..self.rank())
            .filter(|&i| self.theta[i] == -&WeightVec::simple_root(self.rank(), i))
            .collect();
        self.pi_star()
            .into_iter()
            .filter(|i| minus.contains(i))
            .filter(|&i| minus.iter().all(|&j| self.root.a(j, i) % 2 == 0))
            .collect()
    }

    /// `D` recomputed from `Theta`: nodes `i` of `pi*` with `i != p(i)` and
    /// `(alpha_i, Theta(alpha_i)) != 0`.
    pub fn computed_d(&self) -> Vec<usize> {
        self.pi_star()
            .into_iter()
            .filter(|&i| self.p[i] != i)
            .filter(|&i| {
                let a = WeightVec::simple_root(self.rank(), i);
                !self.root.inner_unchecked(&a, &self.theta[i]).is_zero()
            })
            .collect()
    }

    /// Checks the structural invariants of the row; returns the list of
    /// failed checks (empty when all hold).
    pub fn validate(&self) -> Vec<String> {
        let mut fails = Vec::new();
        let n = self.rank();
        let roots = self.root.root_set();
        for i in 0..n {
            let a = WeightVec::simple_root(n, i);
            let tt = self.theta_unchecked(&self.theta[i]);
            if tt != a {
                fails.push(format!("Theta^2(alpha_{}) != alpha_{}", i + 1, i + 1));
            }
            if self.in_pi_theta(i) {
                continue;
            }
            // Theta(alpha_i) + alpha_{p(i)} lies in the span of pi_Theta.
            let w = &self.theta[i] + &WeightVec::simple_root(n, self.p[i]);
            if w
                .coords()
                .iter()
                .enumerate()
                .any(|(k, c)| !c.is_zero() && !self.in_pi_theta(k))
            {
                fails.push(format!("Theta(alpha_{}) + alpha_p(i) leaves span(pi_Theta)", i + 1));
            }
        }
        for beta in self.root.roots() {
            let t = self.theta_unchecked(&beta);
            match t.to_ints() {
                Some(c) if roots.contains(&c) => {}
                _ => {
                    fails.push(format!("Theta does not map root {beta} to a root"));
                    break;
                }
            }
        }
        for i in 0..n {
            if self.p[self.p[i]] != i {
                fails.push("p is not an involution".into());
                break;
            }
            for j in 0..n {
                if self.root.a(self.p[i], self.p[j]) != self.root.a(i, j) {
                    fails.push("p is not a diagram automorphism".into());
                    return fails;
                }
            }
        }
        if self.computed_s() != self.s_set {
            fails.push(format!(
                "S recomputed as {:?}, stated {:?}",
                one_based(&self.computed_s()),
                one_based(&self.s_set)
            ));
        }
        if self.computed_d() != self.d_set {
            fails.push(format!(
                "D recomputed as {:?}, stated {:?}",
                one_based(&self.computed_d()),
                one_based(&self.d_set)
            ));
        }
        if !matches!(self.pair, PairType::Double(_)) {
            let (s, d) = (self.s_set.len(), self.d_set.len());
            if !((s == 0 && d <= 1) || (d == 0 && s <= 1)) {
                fails.push("both S and D nonempty, or one has two elements".into());
            }
        }
        fails
    }

    /// The row as JSON, with 1-based nodes.
    pub fn to_json(&self) -> Value {
        let seqs: BTreeMap<String, Value> = self
            .non_fixed()
            .into_iter()
            .map(|i| {
                let (s, sign) = self.ad_sequence(i).unwrap_or((vec![], 1));
                (
                    (i + 1).to_string(),
                    json!({
                        "factors": s.iter().map(|&(k, m)| json!([k + 1, m])).collect::<Vec<_>>(),
                        "sign": sign,
                        "partner": i > self.p[i],
                    }),
                )
            })
            .collect();
        json!({
            "type": self.pair.to_string(),
            "root_system": self.root.name(),
            "n": self.n,
            "r": self.r,
            "pi_theta": one_based(&self.pi_theta),
            "p": one_based(&self.p),
            "S": one_based(&self.s_set),
            "D": one_based(&self.d_set),
            "sequences": seqs,
            "theta": self.theta.iter().map(|t| serde_json::to_value(t).expect("serializable")).collect::<Vec<_>>(),
        })
    }

    /// The weights fixed by `Theta`, as a spanning set
    /// `{beta + Theta(beta) : beta in pi}` (the `pi_Theta` contribution
    /// is included as `2 alpha_j`).
    pub fn fixed_space_spanning_set(&self) -> Vec<WeightVec> {
        (0..self.rank())
            .map(|i| &WeightVec::simple_root(self.rank(), i) + &self.theta[i])
            .filter(|w| !w.is_zero())
            .collect()
    }

    /// The roots of the Levi subsystem generated by `pi_Theta`.
    pub fn theta_fixed_roots(&self) -> HashSet<Vec<i64>> {
        self.root
            .root_set()
            .into_iter()
            .filter(|r| r.iter().enumerate().all(|(k, &c)| c == 0 || self.in_pi_theta(k)))
            .collect()
    }
}

pub(crate) fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

/// Every row of the table at every rank up to `max_rank` for the classical
/// families, every exceptional row, and the `DOUBLE` rows whose simple
/// factor has rank at most `max_double_rank`.
pub fn table(max_rank: usize, max_double_rank: usize) -> Vec<InvolutionDatum> {
    let mut out = Vec::new();
    for pair in PairType::SIMPLE {
        let ranks: Vec<usize> = match pair.fixed_rank() {
            Some(k) => vec![k],
            None => (1..=max_rank).collect(),
        };
        for n in ranks {
            if pair.takes_r() {
                for r in 1..=n {
                    if let Ok(d) = InvolutionDatum::new(pair, n, Some(r)) {
                        out.push(d);
                    }
                }
            } else if let Ok(d) = InvolutionDatum::new(pair, n, None) {
                out.push(d);
            }
        }
    }
    for t in [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E,
        CartanType::F,
        CartanType::G,
    ] {
        for n in 1..=max_double_rank {
            if let Ok(d) = InvolutionDatum::new(PairType::Double(t), n, None) {
                out.push(d);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> WeightVec {
        WeightVec::from_ints(c)
    }

    #[test]
    fn theta_examples() {
        let ai = InvolutionDatum::new(PairType::AI, 2, None).unwrap();
        assert_eq!(ai.theta(&w(&[1, 0])).unwrap(), w(&[-1, 0]));
        let aii = InvolutionDatum::new(PairType::AII, 3, None).unwrap();
        assert_eq!(aii.theta(&w(&[0, 1, 0])).unwrap(), w(&[-1, -1, -1]));
        assert_eq!(aii.theta(&w(&[1, 0, 0])).unwrap(), w(&[1, 0, 0]));
        let half = Rational64::new(1, 2);
        assert_eq!(
            aii.tilde(&w(&[0, 1, 0])).unwrap(),
            WeightVec::new(vec![half, Rational64::from_integer(1), half])
        );
        assert!(aii.tilde(&w(&[1, 0, 0])).unwrap().is_zero());
        assert_eq!(ai.tilde(&w(&[2, -1])).unwrap(), w(&[2, -1]));
    }

    #[test]
    fn partner_sequences() {
        let a = InvolutionDatum::new(PairType::AIII1, 6, Some(2)).unwrap();
        let (s, sign) = a.ad_sequence(1).unwrap();
        assert_eq!((s, sign), (vec![(2, 1), (3, 1)], 1));
        let (s, sign) = a.ad_sequence(4).unwrap();
        assert_eq!((s, sign), (vec![(3, 1), (2, 1)], 1));
        let e = InvolutionDatum::new(PairType::EIII, 6, None).unwrap();
        assert_eq!(e.ad_sequence(5).unwrap().1, -1);
    }

    #[test]
    fn whole_table_is_consistent() {
        let rows = table(8, 4);
        assert!(rows.len() > 100);
        for row in &rows {
            let fails = row.validate();
            assert!(fails.is_empty(), "{}: {:?}", row.name(), fails);
        }
    }

    #[test]
    fn names_parse() {
        for p in PairType::SIMPLE {
            assert_eq!(p.to_string().parse::<PairType>().unwrap(), p);
        }
        assert_eq!(
            "DOUBLE(A)".parse::<PairType>().unwrap(),
            PairType::Double(CartanType::A)
        );
        assert!(InvolutionDatum::new(PairType::AII, 4, None).is_err());
        assert!(InvolutionDatum::new(PairType::BI, 3, None).is_err());
    }
}
