//! Joint kernels of operator families.
//!
//! The rank of the stacked system is probed at random rational points,
//! which selects a set of independent equations; the exact solution is then
//! obtained from that square subsystem and checked against every equation.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Specialize;
use crate::linalg::{rref, solve};
use crate::uqrep::Operator;

use super::point::Point;

const ATTEMPTS: u64 = 4;

/// The outcome of a joint-kernel computation on a set of basis columns.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelSolve<F> {
    /// Dimension of the joint kernel.
    pub dim: usize,
    /// For a one-dimensional kernel, the generator normalized to have
    /// coefficient one at the distinguished column (full-length vector).
    pub vector: Option<Vec<F>>,
}

/// Which side the operators act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Vectors `v` with `O v = 0`.
    Right,
    /// Covectors `w` with `w O = 0`.
    Left,
}

/// The equations of the joint kernel restricted to the unknowns `cols`,
/// one dense row per nonzero row of the stacked operators.
fn equations<F: Specialize>(ops: &[&Operator<F>], cols: &[usize], side: Side) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = Vec::new();
    for op in ops {
        let op = match side {
            Side::Right => (*op).clone(),
            Side::Left => op.transpose(),
        };
        let sub = op.submatrix(&(0..op.nrows()).collect::<Vec<_>>(), cols);
        for r in 0..sub.nrows() {
            let row = sub.row(r);
            if row.is_empty() {
                continue;
            }
            let mut dense = vec![F::zero(); cols.len()];
            for (c, x) in row {
                dense[*c] = x.clone();
            }
            if !out.contains(&dense) {
                out.push(dense);
            }
        }
    }
    out
}

/// Greedy selection of rows that are independent at the given values.
fn independent_rows(rows: &[Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for c in 0..ncols {
                    if !b[c].is_zero() {
                        let t = &f * &b[c];
                        r[c] -= t;
                    }
                }
            }
        }
        if let Some(p) = (0..ncols).find(|&c| !r[c].is_zero()) {
            let inv = r[p].recip();
            for x in r.iter_mut() {
                *x *= &inv;
            }
            // Keep the stored rows reduced against the new pivot.
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for c in 0..ncols {
                        if !r[c].is_zero() {
                            let t = &f * &r[c];
                            b[c] -= t;
                        }
                    }
                }
            }
            basis.push((p, r));
            chosen.push(k);
            if basis.len() == ncols {
                break;
            }
        }
    }
    chosen
}

fn specialize_rows<F: Specialize>(rows: &[Vec<F>], point: &Point) -> Result<Vec<Vec<BigRational>>> {
    let value = point.assignment();
    rows.iter()
        .map(|r| r.iter().map(|x| x.specialize(&value)).collect())
        .collect()
}

/// The joint kernel of `ops` among vectors supported on `cols` (basis
/// indices of a space of dimension `dim`), normalized at the basis index
/// `top`.
///
/// Errors with [`Error::TheoremViolation`] when the kernel has dimension at
/// least two, or when a one-dimensional kernel vanishes at `top`.
pub fn joint_kernel<F: Specialize>(
    ops: &[&Operator<F>],
    dim: usize,
    cols: &[usize],
    top: usize,
    side: Side,
) -> Result<KernelSolve<F>> {
    let rows = equations(ops, cols, side);
    let n = cols.len();
    if n == 0 {
        return Ok(KernelSolve { dim: 0, vector: None });
    }
    let top_col = cols.iter().position(|&c| c == top);
    let mut last_err = None;
    for seed in 0..ATTEMPTS {
        let point = Point::from_seed(0x5eed + seed);
        let special = match specialize_rows(&rows, &point) {
            Ok(s) => s,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        let chosen = independent_rows(&special, n);
        let kdim = n - chosen.len();
        if kdim == 0 {
            // The exact rank is at least the specialized rank.
            return Ok(KernelSolve { dim: 0, vector: None });
        }
        if kdim >= 2 {
            last_err = Some(Error::TheoremViolation(format!(
                "invariant space of dimension {kdim} (at most one expected)"
            )));
            continue;
        }
        let kernel = rref(chosen.iter().map(|&k| special[k].clone()).collect(), n).nullspace();
        let Some(tc) = top_col.filter(|&tc| !kernel[0][tc].is_zero()) else {
            last_err = Some(Error::TheoremViolation(
                "invariant vector has no highest weight component".into(),
            ));
            continue;
        };
        // Exact solve of the square subsystem with x_top = 1.
        let others: Vec<usize> = (0..n).filter(|&c| c != tc).collect();
        let a: Vec<Vec<F>> = chosen
            .iter()
            .map(|&k| others.iter().map(|&c| rows[k][c].clone()).collect())
            .collect();
        let b: Vec<F> = chosen.iter().map(|&k| -rows[k][tc].clone()).collect();
        let Some(x) = solve(&a, &b, others.len()) else {
            return Err(Error::TheoremViolation("inconsistent invariance system".into()));
        };
        let mut local = vec![F::zero(); n];
        local[tc] = F::one();
        for (c, xc) in others.iter().zip(x) {
            local[*c] = xc;
        }
        let holds = rows.iter().all(|r| {
            let mut s = F::zero();
            for (a, b) in r.iter().zip(&local) {
                if !a.is_zero() && !b.is_zero() {
                    s += &(a.clone() * b);
                }
            }
            s.is_zero()
        });
        if !holds {
            // The point was special: the exact kernel is trivial.
            return exact_kernel(&rows, dim, cols, top_col);
        }
        let mut full = vec![F::zero(); dim];
        for (c, x) in cols.iter().zip(local) {
            full[*c] = x;
        }
        return Ok(KernelSolve { dim: 1, vector: Some(full) });
    }
    match last_err {
        Some(Error::Pole(_)) | None => exact_kernel(&rows, dim, cols, top_col),
        Some(e) => Err(e),
    }
}

/// Fallback: full exact elimination.
fn exact_kernel<F: Specialize>(
    rows: &[Vec<F>],
    dim: usize,
    cols: &[usize],
    top_col: Option<usize>,
) -> Result<KernelSolve<F>> {
    let kernel = rref(rows.to_vec(), cols.len()).nullspace();
    match kernel.len() {
        0 => Ok(KernelSolve { dim: 0, vector: None }),
        1 => {
            let k = &kernel[0];
            let Some(tc) = top_col.filter(|&tc| !k[tc].is_zero()) else {
                return Err(Error::TheoremViolation(
                    "invariant vector has no highest weight component".into(),
                ));
            };
            let inv = k[tc].inv().expect("nonzero");
            let mut full = vec![F::zero(); dim];
            for (c, x) in cols.iter().zip(k) {
                full[*c] = x.clone() * &inv;
            }
            Ok(KernelSolve { dim: 1, vector: Some(full) })
        }
        d => Err(Error::TheoremViolation(format!(
            "invariant space of dimension {d} (at most one expected)"
        ))),
    }
}

/// The dimension of the joint kernel at a single rational point, for fast
/// scans. Equal to the exact dimension away from a proper Zariski-closed
/// set of points; never smaller than it.
pub fn kernel_dim_at<F: Specialize>(
    ops: &[&Operator<F>],
    cols: &[usize],
    side: Side,
    seed: u64,
) -> Result<usize> {
    let rows = equations(ops, cols, side);
    let special = specialize_rows(&rows, &Point::from_seed(seed))?;
    Ok(cols.len() - independent_rows(&special, cols.len()).len())
}
