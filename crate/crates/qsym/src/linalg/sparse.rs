//! Row-compressed sparse matrices over a field.

use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

/// A sparse matrix stored by rows. Each row is sorted by column and holds
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| F::one()).collect())
    }

    pub fn diagonal(entries: Vec<F>) -> Self {
        let n = entries.len();
        let rows = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        SparseMatrix {
            nrows: n,
            ncols: n,
            rows,
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated
    /// positions are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: Vec<(usize, usize, F)>) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, x) in triplets {
            m.add_at(i, j, &x);
        }
        m
    }

    /// Builds a matrix from dense rows.
    pub fn from_dense(rows: &[Vec<F>], ncols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            m.rows[i] = row
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, F)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Overwrites entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, x: F) {
        assert!(i < self.nrows && j < self.ncols, "index out of bounds");
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => {
                if x.is_zero() {
                    row.remove(pos);
                } else {
                    row[pos].1 = x;
                }
            }
            Err(pos) => {
                if !x.is_zero() {
                    row.insert(pos, (j, x));
                }
            }
        }
    }

    /// Adds `x` to entry `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, x: &F) {
        if x.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, cur + x);
    }

    /// All nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.ncols]; self.nrows];
        for (i, j, x) in self.triplets() {
            out[i][j] = x.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, j, x) in self.triplets() {
            rows[j].push((i, x.clone()));
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|x| x.clone() * c)
    }

    /// Applies `f` entrywise; entries mapped to zero are dropped.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseMatrix<G> {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(j, x)| (*j, f(x)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    /// Like [`SparseMatrix::map`] with a fallible entry map.
    pub fn try_map<G: Field, E>(
        &self,
        f: impl Fn(&F) -> Result<G, E>,
    ) -> Result<SparseMatrix<G>, E> {
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (j, x) in r {
                let y = f(x)?;
                if !y.is_zero() {
                    out.push((*j, y));
                }
            }
            rows.push(out);
        }
        Ok(SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        })
    }

    /// Multiplies row `i` by `d[i]` (left multiplication by a diagonal).
    pub fn scale_rows(&self, d: &[F]) -> Self {
        assert_eq!(d.len(), self.nrows, "diagonal length");
        let mut out = self.clone();
        for (row, c) in out.rows.iter_mut().zip(d) {
            for (_, x) in row.iter_mut() {
                *x *= c;
            }
            row.retain(|(_, x)| !x.is_zero());
        }
        out
    }

    /// Multiplies column `j` by `d[j]` (right multiplication by a diagonal).
    pub fn scale_cols(&self, d: &[F]) -> Self {
        assert_eq!(d.len(), self.ncols, "diagonal length");
        let mut out = self.clone();
        for row in out.rows.iter_mut() {
            for (j, x) in row.iter_mut() {
                *x *= &d[*j];
            }
            row.retain(|(_, x)| !x.is_zero());
        }
        out
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(
            (self.nrows, self.ncols),
            (other.nrows, other.ncols),
            "shape mismatch"
        );
        let mut rows = Vec::with_capacity(self.nrows);
        for (a, b) in self.rows.iter().zip(&other.rows) {
            let mut out = Vec::with_capacity(a.len() + b.len());
            let (mut p, mut q) = (0, 0);
            while p < a.len() || q < b.len() {
                let take_a = q >= b.len() || (p < a.len() && a[p].0 < b[q].0);
                let take_b = p >= a.len() || (q < b.len() && b[q].0 < a[p].0);
                if take_a {
                    out.push(a[p].clone());
                    p += 1;
                } else if take_b {
                    let x = if sign { b[q].1.clone() } else { -b[q].1.clone() };
                    out.push((b[q].0, x));
                    q += 1;
                } else {
                    let x = if sign {
                        a[p].1.clone() + &b[q].1
                    } else {
                        a[p].1.clone() - &b[q].1
                    };
                    if !x.is_zero() {
                        out.push((a[p].0, x));
                    }
                    p += 1;
                    q += 1;
                }
            }
            rows.push(out);
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut acc: Vec<Option<F>> = vec![None; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for a in &self.rows {
            for (k, x) in a {
                for (j, y) in &other.rows[*k] {
                    let prod = x.clone() * y;
                    match &mut acc[*j] {
                        Some(s) => *s += &prod,
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                let s = acc[j].take().expect("touched slot");
                if !s.is_zero() {
                    out.push((j, s));
                }
            }
            touched.clear();
            rows.push(out);
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    /// Matrix times column vector.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.ncols, "vector length");
        self.rows
            .iter()
            .map(|r| {
                let mut s = F::zero();
                for (j, a) in r {
                    if !x[*j].is_zero() {
                        s += &(a.clone() * &x[*j]);
                    }
                }
                s
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.nrows, "vector length");
        let mut out = vec![F::zero(); self.ncols];
        for (r, xi) in self.rows.iter().zip(x) {
            if xi.is_zero() {
                continue;
            }
            for (j, a) in r {
                out[*j] += &(xi.clone() * a);
            }
        }
        out
    }

    /// The Kronecker product; the basis of the result is ordered with the
    /// index of `other` varying fastest.
    pub fn kron(&self, other: &Self) -> Self {
        let mut rows = Vec::with_capacity(self.nrows * other.nrows);
        for a in &self.rows {
            for b in &other.rows {
                let mut out = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        out.push((i * other.ncols + j, x.clone() * y));
                    }
                }
                out.retain(|(_, x)| !x.is_zero());
                rows.push(out);
            }
        }
        SparseMatrix {
            nrows: self.nrows * other.nrows,
            ncols: self.ncols * other.ncols,
            rows,
        }
    }

    /// The submatrix on the given rows and columns, in the given orders.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let mut out = Self::zeros(rows.len(), cols.len());
        for (k, &r) in rows.iter().enumerate() {
            let mut row: Vec<(usize, F)> = self.rows[r]
                .iter()
                .filter(|(j, _)| pos[*j] != usize::MAX)
                .map(|(j, x)| (pos[*j], x.clone()))
                .collect();
            row.sort_by_key(|(j, _)| *j);
            out.rows[k] = row;
        }
        out
    }

    /// The first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &F)> {
        self.triplets().next()
    }
}

impl<F: Field> Add for &SparseMatrix<F> {
    type Output = SparseMatrix<F>;
    fn add(self, rhs: Self) -> SparseMatrix<F> {
        self.combine(rhs, true)
    }
}

impl<F: Field> Sub for &SparseMatrix<F> {
    type Output = SparseMatrix<F>;
    fn sub(self, rhs: Self) -> SparseMatrix<F> {
        self.combine(rhs, false)
    }
}

impl<F: Field> Mul for &SparseMatrix<F> {
    type Output = SparseMatrix<F>;
    fn mul(self, rhs: Self) -> SparseMatrix<F> {
        self.matmul(rhs)
    }
}

impl<F: Field> Neg for &SparseMatrix<F> {
    type Output = SparseMatrix<F>;
    fn neg(self) -> SparseMatrix<F> {
        self.map(|x| -x.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> SparseMatrix<Rational> {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r0| r0.iter().map(|&x| r(x)).collect()).collect();
        SparseMatrix::from_dense(&dense, rows[0].len())
    }

    #[test]
    fn product_and_sum() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[2, 1], &[1, 0]]));
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.apply(&[r(1), r(1)]), vec![r(3), r(1)]);
        assert_eq!(a.apply_row(&[r(1), r(1)]), vec![r(1), r(3)]);
    }

    #[test]
    fn kronecker_mixed_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 1]]);
        let c = m(&[&[2, 0], &[1, 1]]);
        let d = m(&[&[1, -1], &[0, 1]]);
        assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn set_and_submatrix() {
        let mut a = SparseMatrix::<Rational>::zeros(3, 3);
        a.set(1, 2, r(5));
        a.add_at(1, 2, &r(-5));
        assert!(a.is_zero());
        a.set(2, 0, r(7));
        let s = a.submatrix(&[2, 1], &[0, 2]);
        assert_eq!(s.get(0, 0), r(7));
        assert_eq!(s.nnz(), 1);
    }
}
