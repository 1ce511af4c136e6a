//! Integer matrices: saturated kernels and Smith invariants.

use num_integer::Integer;

/// A basis of the lattice `{x in Z^n : A x = 0}`, where `A` is given by
/// rows of length `n`. The basis is saturated: it spans the full integer
/// kernel, not just a finite-index sublattice.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    // Column operations on A, recorded in the unimodular matrix U. Once
    // A U is in column echelon form, the columns of U beyond the rank span
    // the kernel.
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut k = 0;
    for r in 0..m.len() {
        if k == n {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (k..n).filter(|&c| m[r][c] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let pivot = *nonzero
                .iter()
                .min_by_key(|&&c| m[r][c].abs())
                .expect("nonempty");
            swap_cols(&mut m, &mut u, k, pivot);
            let mut done = true;
            for c in (k + 1)..n {
                if m[r][c] != 0 {
                    let f = Integer::div_floor(&m[r][c], &m[r][k]);
                    add_col(&mut m, &mut u, c, k, -f);
                    if m[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                k += 1;
                break;
            }
        }
    }
    (k..n).map(|c| (0..n).map(|i| u[i][c]).collect()).collect()
}

fn swap_cols(m: &mut [Vec<i64>], u: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row.swap(a, b);
    }
}

/// Column `dst += f * column src`.
fn add_col(m: &mut [Vec<i64>], u: &mut [Vec<i64>], dst: usize, src: usize, f: i64) {
    for row in m.iter_mut().chain(u.iter_mut()) {
        row[dst] += f * row[src];
    }
}

/// The nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_invariants(a: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        let Some((pr, pc)) = smallest_entry(&m, t) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut changed = false;
            for i in (t + 1)..nrows {
                if m[i][t] != 0 {
                    let f = Integer::div_floor(&m[i][t], &m[t][t]);
                    for j in t..ncols {
                        m[i][j] -= f * m[t][j];
                    }
                    if m[i][t] != 0 {
                        changed = true;
                    }
                }
            }
            for j in (t + 1)..ncols {
                if m[t][j] != 0 {
                    let f = Integer::div_floor(&m[t][j], &m[t][t]);
                    for row in m.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    if m[t][j] != 0 {
                        changed = true;
                    }
                }
            }
            if !changed {
                // The pivot must also divide the rest of the block.
                let bad = ((t + 1)..nrows)
                    .flat_map(|i| ((t + 1)..ncols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % m[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..ncols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            let (pr, pc) = smallest_entry_in_cross(&m, t);
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

fn smallest_entry(m: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_entry_in_cross(m: &[Vec<i64>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..m.len() {
        let x = m[i][t];
        if x != 0 && (m[best.0][best.1] == 0 || x.abs() < m[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..m[t].len() {
        let x = m[t][j];
        if x != 0 && (m[best.0][best.1] == 0 || x.abs() < m[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    best
}
