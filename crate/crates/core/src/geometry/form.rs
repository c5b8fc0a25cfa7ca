//! Constant-coefficient 2-forms `ω = Σ_{j<k} c_{jk} du_j ∧ du_k` on `R^n`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::affine::{affine_generator, AffineMap};
use crate::cohomology::{ExteriorElement, Monomial};
use crate::criteria::{is_symplectic, Pairing};
use crate::linalg::Matrix;
use crate::matrix::{BottMatrix, MAX_SIZE};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoForm {
    size: usize,
    /// Row-major strict upper triangle.
    upper: Vec<Rational>,
}

impl TwoForm {
    pub fn zero(size: usize) -> Self {
        assert!(size <= MAX_SIZE);
        Self {
            size,
            upper: alloc::vec![Rational::zero(); size * size.saturating_sub(1) / 2],
        }
    }

    /// Accumulates `c · du_j ∧ du_k` terms; `(k, j, c)` means `-c · du_j ∧ du_k`.
    pub fn from_terms(size: usize, terms: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut form = Self::zero(size);
        for (j, k, c) in terms {
            let current = form.get(*j, *k)?;
            form.set(*j, *k, current + c)?;
        }
        Ok(form)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn slot(&self, j: usize, k: usize) -> usize {
        debug_assert!(j < k && k < self.size);
        j * (2 * self.size - j - 1) / 2 + (k - j - 1)
    }

    fn check(&self, j: usize, k: usize) -> Result<()> {
        for index in [j, k] {
            if index >= self.size {
                return Err(Error::IndexOutOfRange {
                    index,
                    len: self.size,
                });
            }
        }
        Ok(())
    }

    /// `ω(e_j, e_k)`; skew, so `get(k, j) = -get(j, k)`.
    pub fn get(&self, j: usize, k: usize) -> Result<Rational> {
        self.check(j, k)?;
        Ok(match j.cmp(&k) {
            core::cmp::Ordering::Less => self.upper[self.slot(j, k)].clone(),
            core::cmp::Ordering::Greater => -self.upper[self.slot(k, j)].clone(),
            core::cmp::Ordering::Equal => Rational::zero(),
        })
    }

    /// Sets `ω(e_j, e_k) = c` (and `ω(e_k, e_j) = -c`). Diagonal must stay zero.
    pub fn set(&mut self, j: usize, k: usize, c: Rational) -> Result<()> {
        self.check(j, k)?;
        match j.cmp(&k) {
            core::cmp::Ordering::Less => {
                let s = self.slot(j, k);
                self.upper[s] = c;
            }
            core::cmp::Ordering::Greater => {
                let s = self.slot(k, j);
                self.upper[s] = -c;
            }
            core::cmp::Ordering::Equal if c.is_zero() => {}
            core::cmp::Ordering::Equal => return Err(Error::DiagonalCoefficient { index: j }),
        }
        Ok(())
    }

    /// Nonzero `(j, k, c_{jk})` with `j < k`, in row-major order.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        let n = self.size;
        (0..n)
            .flat_map(move |j| (j + 1..n).map(move |k| (j, k)))
            .zip(&self.upper)
            .filter(|(_, c)| !c.is_zero())
            .map(|((j, k), c)| (j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Zero::is_zero)
    }

    pub fn to_exterior(&self) -> ExteriorElement<Rational> {
        ExteriorElement::from_terms(
            self.coefficients()
                .map(|(j, k, c)| (Monomial::from_indices([j, k]), c.clone())),
        )
    }

    /// The skew matrix `C` with `ω(x, y) = xᵀ C y`.
    pub fn skew_matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.size)
            .map(|j| (0..self.size).map(|k| self.get(j, k).unwrap()).collect())
            .collect()
    }

    pub(crate) fn restricted(&self, coords: &[usize]) -> Matrix {
        coords
            .iter()
            .map(|&j| coords.iter().map(|&k| self.get(j, k).unwrap()).collect())
            .collect()
    }

    /// `ω(x, y)` for vectors in coordinates `u`.
    pub fn evaluate(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.coefficients()
            .fold(Rational::zero(), |acc, (j, k, c)| {
                acc + c * (&x[j] * &y[k] - &x[k] * &y[j])
            })
    }
}

pub enum FormSource<'a> {
    /// Unit coefficients `Σ_k du_{j_k} ∧ du_{j_{k+n}}`.
    Pairing(&'a Pairing),
    /// Explicit `(j, k, c)` terms, each on a pair of equal columns.
    Coefficients(&'a [(usize, usize, Rational)]),
}

/// Builds `ω = Σ c_{jk} du_j ∧ du_k` on `M(A)`, supported on equal-column pairs.
pub fn build_symplectic_form(a: &BottMatrix, source: FormSource<'_>) -> Result<TwoForm> {
    match source {
        FormSource::Pairing(pairing) => {
            if !is_symplectic(a) {
                return Err(Error::NotSymplectic);
            }
            pairing.validate_for(a)?;
            let mut form = TwoForm::zero(a.size());
            for &(j, k) in pairing.pairs() {
                form.set(j, k, Rational::one())?;
            }
            Ok(form)
        }
        FormSource::Coefficients(terms) => {
            let cols = a.column_words();
            for (j, k, c) in terms {
                if *j >= a.size() || *k >= a.size() {
                    return Err(Error::IndexOutOfRange {
                        index: (*j).max(*k),
                        len: a.size(),
                    });
                }
                if !c.is_zero() && cols[*j] != cols[*k] {
                    return Err(Error::NonInvariantCoefficient {
                        j: (*j).min(*k),
                        k: (*j).max(*k),
                    });
                }
            }
            TwoForm::from_terms(a.size(), terms)
        }
    }
}

/// `g^*ω`: `c_{jk} ↦ D_jj D_kk c_{jk}`; translations act trivially.
pub fn pullback(g: &AffineMap, form: &TwoForm) -> Result<TwoForm> {
    if g.size() != form.size() {
        return Err(Error::SizeMismatch {
            expected: form.size(),
            found: g.size(),
        });
    }
    let mut out = form.clone();
    for (j, k, c) in form.coefficients() {
        if g.sign(j) != g.sign(k) {
            out.set(j, k, -c.clone())?;
        }
    }
    Ok(out)
}

/// `s_i^*ω = ω` for every generator. Forms of the wrong size are not invariant.
pub fn verify_invariance(a: &BottMatrix, form: &TwoForm) -> bool {
    if form.size() != a.size() {
        return false;
    }
    (0..a.size()).all(|i| {
        let s = affine_generator(a, i).expect("index in range");
        pullback(&s, form).is_ok_and(|p| p == *form)
    })
}

/// `ω^{n/2} ≠ 0`, computed exactly in the exterior algebra. Odd sizes are degenerate.
pub fn nondegenerate(form: &TwoForm) -> bool {
    let n = form.size();
    if n % 2 == 1 {
        return false;
    }
    !form.to_exterior().pow(n / 2).is_zero()
}
