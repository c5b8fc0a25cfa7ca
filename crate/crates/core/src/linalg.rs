//! Small dense exact-rational matrix helpers.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

pub(crate) type Matrix = Vec<Vec<Rational>>;

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub(crate) fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rational::zero(), |acc, k| {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            acc + &row[k] * &b[k][j]
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Rank by fraction-exact Gaussian elimination.
pub(crate) fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (top, bottom) = m.split_at_mut(i);
            for (x, p) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                *x -= &f * p;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
