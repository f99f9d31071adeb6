//! Integer Smith normal form, used as the independent certificate for
//! finite-quotient orders (the coset enumeration in [`crate::lgroup`] must
//! agree with the determinant this module computes).

use crate::{Error, Result};

/// Diagonal of the Smith normal form of an integer matrix, as nonnegative
/// invariant factors `d1 | d2 | ...` (padded with the zero entries of a
/// singular matrix).
///
/// # Panics
/// Panics if the matrix is empty or ragged.
pub fn smith_diagonal(mat: &[Vec<i64>]) -> Vec<i128> {
    let rows = mat.len();
    assert!(rows > 0, "empty matrix");
    let cols = mat[0].len();
    assert!(mat.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut a: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();

    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }

            // Row and column are clear; restore the divisibility chain if a
            // later entry escapes the pivot.
            let pivot = a[t][t];
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| a[i][j].rem_euclid(pivot.abs()) != 0));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j];
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }

    (0..n).map(|t| a[t][t].abs()).collect()
}

fn min_abs_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.len() {
        for j in t..a[i].len() {
            if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Order of the abelian group presented by a square relation matrix,
/// computed as the product of the Smith invariant factors.
///
/// A singular matrix presents an infinite group and is rejected.
pub fn quotient_order(mat: &[Vec<i64>]) -> Result<i64> {
    assert_eq!(mat.len(), mat[0].len(), "presentation matrix must be square");
    let diag = smith_diagonal(mat);
    let mut order: i128 = 1;
    for d in diag {
        if d == 0 {
            return Err(Error::InfiniteQuotient);
        }
        order *= d;
    }
    Ok(i64::try_from(order).expect("quotient order overflows i64"))
}
