//! Exact integer kernel of an exponent matrix.
//!
//! Columns are reduced by unimodular operations (gcd elimination), tracking
//! the transform on an identity matrix.  Columns of the transform that pair
//! with zeroed matrix columns form a basis of the full integer kernel
//! lattice, not just a finite-index sublattice, because unimodular column
//! operations preserve the column span of the transform exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cuts::ExponentMatrix;

/// Basis of `{ v : M v = 0 }` as integer vectors of length `m.cols()`.
pub fn lattice_kernel(m: &ExponentMatrix) -> Vec<Vec<i64>> {
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| BigInt::from(m.entry(i, j))).collect())
        .collect();
    kernel_of_rows(rows, m.cols())
}

/// Kernel of the matrix with an all-ones row appended: the homogeneous
/// kernel.  When some row combination already sums to all ones (true for any
/// exponent matrix of a graph with at least one edge) this agrees with the
/// plain kernel.
pub fn lattice_kernel_homogeneous(m: &ExponentMatrix) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| BigInt::from(m.entry(i, j))).collect())
        .collect();
    rows.push(vec![BigInt::from(1); m.cols()]);
    kernel_of_rows(rows, m.cols())
}

fn kernel_of_rows(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<i64>> {
    let rows = a.len();
    // Transform columns: u[j] is the j-th column of the accumulated
    // unimodular matrix, stored column-major.
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut col = vec![BigInt::zero(); cols];
            col[j] = BigInt::from(1);
            col
        })
        .collect();
    let mut done = 0; // columns < done are pivot columns of earlier rows
    for r in 0..rows {
        loop {
            // Pick the nonzero entry of smallest magnitude in row r among
            // active columns.
            let mut best: Option<usize> = None;
            for j in done..cols {
                if !a[r][j].is_zero() {
                    best = match best {
                        Some(k) if a[r][k].abs() <= a[r][j].abs() => Some(k),
                        _ => Some(j),
                    };
                }
            }
            let Some(p) = best else { break };
            let mut others = false;
            for j in done..cols {
                if j == p || a[r][j].is_zero() {
                    continue;
                }
                let q = &a[r][j] / &a[r][p];
                if !q.is_zero() {
                    for i in r..rows {
                        let t = &a[i][p] * &q;
                        a[i][j] -= t;
                    }
                    for i in 0..cols {
                        let t = &u[p][i] * &q;
                        u[j][i] -= t;
                    }
                }
                if !a[r][j].is_zero() {
                    others = true;
                }
            }
            if !others {
                // Row r is cleared except for column p; swap that column
                // into the pivot position and freeze it.
                for row in a.iter_mut() {
                    row.swap(p, done);
                }
                u.swap(p, done);
                done += 1;
                break;
            }
        }
        if done == cols {
            break;
        }
    }
    (done..cols)
        .map(|j| {
            u[j].iter()
                .map(|x| i64::try_from(x).expect("kernel entry exceeds i64"))
                .collect()
        })
        .collect()
}
