//! Darboux normal form of `ω` on the zero-column coordinates.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::form::{verify_invariance, TwoForm};
use crate::linalg::{self, Matrix};
use crate::matrix::BottMatrix;
use crate::{Error, Rational, Result};

/// A basis of the zero-column coordinate block in which `ω` restricts to
/// `Σ_{i<r} du'_i ∧ du'_{i+r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxBasis {
    coordinates: Vec<usize>,
    change: Vec<Vec<Rational>>,
}

impl DarbouxBasis {
    /// Original indices `j` with `A_j = 0`, ascending.
    pub fn coordinates(&self) -> &[usize] {
        &self.coordinates
    }

    /// `L`, with column `p` the `p`-th new basis vector in block coordinates.
    pub fn change(&self) -> &[Vec<Rational>] {
        &self.change
    }

    /// Half the block size.
    pub fn half_rank(&self) -> usize {
        self.coordinates.len() / 2
    }

    /// New basis vector `p` as a vector of `R^n`.
    pub fn basis_vector(&self, p: usize, n: usize) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); n];
        for (row, &j) in self.coordinates.iter().enumerate() {
            v[j] = self.change[row][p].clone();
        }
        v
    }
}

/// `J = [[0, I_r], [-I_r, 0]]`.
pub fn standard_form(r: usize) -> Vec<Vec<Rational>> {
    (0..2 * r)
        .map(|i| {
            (0..2 * r)
                .map(|j| {
                    if j == i + r {
                        Rational::one()
                    } else if i == j + r {
                        -Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Symplectic Gram–Schmidt on a skew matrix `C`.
///
/// Takes the first remaining vector as pivot `v`, pairs it with the
/// lowest-index remaining `w` with `ω(v, w) ≠ 0` (scaled so `ω(v, w) = 1`),
/// and projects the rest off `span{v, w}`. Returns `L` with
/// `Lᵀ C L = standard_form(r)`; columns are `v_1..v_r, w_1..w_r`.
pub fn symplectic_gram_schmidt(c: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let m = c.len();
    if m % 2 == 1 {
        return Err(Error::Degenerate);
    }
    let pair = |x: &[Rational], y: &[Rational]| -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !c[i][j].is_zero() {
                    acc += xi * &c[i][j] * yj;
                }
            }
        }
        acc
    };
    let mut remaining: Vec<Vec<Rational>> = linalg::identity(m);
    let mut vs = Vec::with_capacity(m / 2);
    let mut ws = Vec::with_capacity(m / 2);
    while !remaining.is_empty() {
        let v = remaining.remove(0);
        let pos = remaining
            .iter()
            .position(|w| !pair(&v, w).is_zero())
            .ok_or(Error::Degenerate)?;
        let w = remaining.remove(pos);
        let scale = pair(&v, &w).recip();
        let w: Vec<Rational> = w.iter().map(|x| x * &scale).collect();
        for x in remaining.iter_mut() {
            let along_v = pair(x, &w);
            let along_w = pair(x, &v);
            for ((xi, vi), wi) in x.iter_mut().zip(&v).zip(&w) {
                *xi = &*xi - &along_v * vi + &along_w * wi;
            }
        }
        vs.push(v);
        ws.push(w);
    }
    let columns: Matrix = vs.into_iter().chain(ws).collect();
    Ok(linalg::transpose(&columns))
}

/// Darboux basis for the restriction of `ω` to the coordinates with `A_j = 0`.
pub fn darboux_basis(a: &BottMatrix, form: &TwoForm) -> Result<DarbouxBasis> {
    if form.size() != a.size() {
        return Err(Error::SizeMismatch {
            expected: a.size(),
            found: form.size(),
        });
    }
    if !verify_invariance(a, form) {
        return Err(Error::NotInvariant);
    }
    let coordinates: Vec<usize> = a
        .column_words()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 0)
        .map(|(j, _)| j)
        .collect();
    let change = symplectic_gram_schmidt(&form.restricted(&coordinates))?;
    Ok(DarbouxBasis {
        coordinates,
        change,
    })
}

/// `Lᵀ C L`.
pub fn congruence(l: &[Vec<Rational>], c: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let l = l.to_vec();
    linalg::mul(&linalg::mul(&linalg::transpose(&l), &c.to_vec()), &l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn skew(m: usize, upper: &[(usize, usize, Rational)]) -> Vec<Vec<Rational>> {
        let mut c = vec![vec![q(0, 1); m]; m];
        for (i, j, x) in upper {
            c[*i][*j] = x.clone();
            c[*j][*i] = -x.clone();
        }
        c
    }

    #[test]
    fn standard_block_gives_identity() {
        let c = standard_form(2);
        assert_eq!(symplectic_gram_schmidt(&c).unwrap(), linalg::identity(4));
    }

    #[test]
    fn rescales_a_single_block() {
        let c = skew(2, &[(0, 1, q(5, 1))]);
        let l = symplectic_gram_schmidt(&c).unwrap();
        assert_eq!(l, vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 5)]]);
    }

    #[test]
    fn generic_block() {
        let c = skew(
            4,
            &[
                (0, 1, q(2, 1)),
                (0, 2, q(-3, 1)),
                (0, 3, q(1, 2)),
                (1, 2, q(7, 1)),
                (1, 3, q(5, 3)),
                (2, 3, q(-1, 1)),
            ],
        );
        let l = symplectic_gram_schmidt(&c).unwrap();
        assert_eq!(congruence(&l, &c), standard_form(2));
    }

    #[test]
    fn degenerate_block_is_rejected() {
        let c = skew(
            4,
            &[
                (0, 1, q(1, 1)),
                (2, 3, q(1, 1)),
                (0, 2, q(1, 1)),
                (1, 3, q(1, 1)),
            ],
        );
        assert_eq!(symplectic_gram_schmidt(&c), Err(Error::Degenerate));
        assert_eq!(
            symplectic_gram_schmidt(&skew(3, &[])),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn darboux_on_example() {
        let a = BottMatrix::from_rows(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]]).unwrap();
        let w = TwoForm::from_terms(4, &[(0, 3, q(1, 1)), (1, 2, q(1, 1))]).unwrap();
        let d = darboux_basis(&a, &w).unwrap();
        assert_eq!(d.coordinates(), &[0, 3]);
        assert_eq!(d.change(), linalg::identity(2).as_slice());
        let bad = TwoForm::from_terms(4, &[(0, 1, q(1, 1))]).unwrap();
        assert_eq!(darboux_basis(&a, &bad), Err(Error::NotInvariant));
    }
}
