//! Gauss-Jordan elimination over an exact field.

use crate::field::Field;

/// A matrix in reduced row echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    /// The nonzero rows; row `k` has a leading one in column `pivots[k]`.
    pub rows: Vec<Vec<F>>,
    /// Pivot columns in increasing order.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// A basis of the solution space of the homogeneous system, one vector
    /// per free column (that column set to one, other free columns zero).
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![F::zero(); self.ncols];
                x[f] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        x[p] = -row[f].clone();
                    }
                }
                x
            })
            .collect()
    }
}

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form.
/// Among the candidate pivots in a column the entry with the smallest
/// [`Field::size_hint`] is chosen.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Rref<F> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let best = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].size_hint());
        let Some(best) = best else { continue };
        rows.swap(rank, best);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for x in rows[rank].iter_mut().skip(col) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                if !p.is_zero() {
                    let t = factor.clone() * p;
                    row[c] -= &t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Rref {
        rows,
        pivots,
        ncols,
    }
}

pub fn rank<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

/// A basis of `{x : A x = 0}` for `A` given by rows.
pub fn nullspace<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    rref(rows, ncols).nullspace()
}

/// Solves `A x = b`. Returns `None` when the system is inconsistent;
/// otherwise the solution with every free variable set to zero.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    assert_eq!(a.len(), b.len(), "right-hand side length");
    let rows: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let red = rref(rows, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let red = rref(a.clone(), 3);
        assert_eq!(red.rank(), 2);
        assert_eq!(red.pivots, vec![0, 1]);
        let ker = red.nullspace();
        assert_eq!(ker.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&ker[0]).map(|(x, y)| x * y).sum();
            assert_eq!(dot, r(0));
        }
    }

    #[test]
    fn solving() {
        let a = rows(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[r(3), r(4)], 2).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
        let singular = rows(&[&[1, 1], &[2, 2]]);
        assert!(solve(&singular, &[r(1), r(3)], 2).is_none());
        assert!(solve(&singular, &[r(1), r(2)], 2).is_some());
    }
}
