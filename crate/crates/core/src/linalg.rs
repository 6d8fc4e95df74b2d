//! Dense Gaussian elimination over F_p.
//!
//! Matrices are `Vec<Vec<u64>>` in row-major order; all routines treat rows
//! as vectors, so "span" always means row span and kernels are left kernels.

use crate::field::PrimeModulus;

/// Reduced row echelon form of the row span of `rows`.
///
/// Returns the nonzero rows of the RREF together with their pivot columns,
/// pivots strictly increasing.
pub fn rref(p: PrimeModulus, mut rows: Vec<Vec<u64>>, ncols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = p.inv(rows[r][col]);
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = p.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = p.neg(row[col]);
                p.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(p: PrimeModulus, rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    rref(p, rows, ncols).1.len()
}

/// Left kernel: all coefficient vectors `c` with `sum_i c_i rows[i] = 0`.
pub fn left_kernel(p: PrimeModulus, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let m = rows.len();
    let augmented: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..m).map(|j| u64::from(i == j)));
            v
        })
        .collect();
    let (reduced, _) = rref(p, augmented, ncols + m);
    reduced.into_iter().filter(|row| row[..ncols].iter().all(|&x| x == 0)).map(|row| row[ncols..].to_vec()).collect()
}

/// Solves `sum_i c_i rows[i] = target` for `c`, if a solution exists.
pub fn solve_left(p: PrimeModulus, rows: &[Vec<u64>], target: &[u64]) -> Option<Vec<u64>> {
    let m = rows.len();
    let ncols = target.len();
    // Eliminate while remembering which combination of input rows each
    // echelon row is.
    let mut work: Vec<(Vec<u64>, Vec<u64>)> =
        rows.iter().enumerate().map(|(i, r)| (r.clone(), (0..m).map(|j| u64::from(i == j)).collect())).collect();
    let mut echelon: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    for col in 0..ncols {
        let Some(idx) = work.iter().position(|(r, _)| r[col] != 0) else {
            continue;
        };
        let (mut row, mut combo) = work.swap_remove(idx);
        let inv = p.inv(row[col]);
        row = p.scale(inv, &row);
        combo = p.scale(inv, &combo);
        for (r, c) in work.iter_mut() {
            if r[col] != 0 {
                let f = p.neg(r[col]);
                p.axpy(r, f, &row);
                p.axpy(c, f, &combo);
            }
        }
        echelon.push((col, row, combo));
    }
    let mut residual = target.to_vec();
    let mut solution = vec![0; m];
    for (col, row, combo) in &echelon {
        let c = residual[*col];
        if c != 0 {
            p.axpy(&mut residual, p.neg(c), row);
            p.axpy(&mut solution, c, combo);
        }
    }
    residual.iter().all(|&x| x == 0).then_some(solution)
}

/// Inverse of a square matrix, if it is invertible.
pub fn invert(p: PrimeModulus, mat: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = mat.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let augmented: Vec<Vec<u64>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut v = row.clone();
            v.extend((0..n).map(|j| u64::from(i == j)));
            v
        })
        .collect();
    let (reduced, pivots) = rref(p, augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row-vector times matrix: `v * mat`.
pub fn vec_mat(p: PrimeModulus, v: &[u64], mat: &[Vec<u64>], ncols: usize) -> Vec<u64> {
    let mut out = vec![0; ncols];
    for (&c, row) in v.iter().zip(mat) {
        p.axpy(&mut out, c, row);
    }
    out
}

pub fn mat_mul(p: PrimeModulus, a: &[Vec<u64>], b: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    a.iter().map(|row| vec_mat(p, row, b, ncols)).collect()
}
