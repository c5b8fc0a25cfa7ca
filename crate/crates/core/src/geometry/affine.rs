use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::matrix::BottMatrix;
use crate::{Error, Rational, Result};

/// `u ↦ D u + t` with `D` diagonal `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    /// Bit `j` set iff `D_jj = -1`.
    negated: u64,
    translation: Vec<Rational>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        Self::translation(alloc::vec![Rational::zero(); n])
    }

    pub fn translation(t: Vec<Rational>) -> Self {
        assert!(t.len() <= 64);
        Self {
            negated: 0,
            translation: t,
        }
    }

    /// Panics unless every sign is `±1`.
    pub fn new(signs: &[i8], translation: Vec<Rational>) -> Result<Self> {
        if signs.len() != translation.len() {
            return Err(Error::SizeMismatch {
                expected: signs.len(),
                found: translation.len(),
            });
        }
        let negated = signs.iter().enumerate().fold(0u64, |m, (j, &s)| {
            assert!(s == 1 || s == -1, "diagonal entry must be ±1");
            if s < 0 {
                m | 1 << j
            } else {
                m
            }
        });
        Ok(Self {
            negated,
            translation,
        })
    }

    pub fn size(&self) -> usize {
        self.translation.len()
    }

    pub fn sign(&self, j: usize) -> i8 {
        if self.negated >> j & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn linear_signs(&self) -> Vec<i8> {
        (0..self.size()).map(|j| self.sign(j)).collect()
    }

    pub fn translation_part(&self) -> &[Rational] {
        &self.translation
    }

    pub fn is_translation(&self) -> bool {
        self.negated == 0
    }

    /// `self ∘ inner`: `(D₁,t₁)∘(D₂,t₂) = (D₁D₂, D₁t₂ + t₁)`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap> {
        self.check(inner.size())?;
        let translation = self
            .translation
            .iter()
            .zip(&inner.translation)
            .enumerate()
            .map(|(j, (t1, t2))| if self.sign(j) < 0 { t1 - t2 } else { t1 + t2 })
            .collect();
        Ok(AffineMap {
            negated: self.negated ^ inner.negated,
            translation,
        })
    }

    pub fn apply(&self, u: &[Rational]) -> Result<Vec<Rational>> {
        self.check(u.len())?;
        Ok(u.iter()
            .zip(&self.translation)
            .enumerate()
            .map(|(j, (x, t))| if self.sign(j) < 0 { t - x } else { t + x })
            .collect())
    }

    fn check(&self, n: usize) -> Result<()> {
        if n != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: n,
            });
        }
        Ok(())
    }
}

/// `s_i`: `u_i ↦ u_i + 1/2`, `u_j ↦ (-1)^{A[i][j]} u_j` for `j > i`.
pub fn affine_generator(a: &BottMatrix, i: usize) -> Result<AffineMap> {
    let row = a.row_mask(i)?;
    let mut translation = alloc::vec![Rational::zero(); a.size()];
    translation[i] = Rational::new(1.into(), 2.into());
    Ok(AffineMap {
        negated: row,
        translation,
    })
}

/// Checks that `Γ(A)` acts freely on `R^n`.
///
/// Every element of `Γ(A)` is `s_0^{ε_0} ∘ … ∘ s_{n-1}^{ε_{n-1}}` composed
/// with a lattice translation. A coset is fixed-point free when some
/// coordinate with `D_jj = +1` carries a non-integer translation; this is
/// checked for all `2^n - 1` nontrivial cosets.
pub fn verify_free_action(a: &BottMatrix) -> bool {
    let n = a.size();
    assert!(n < 64, "free-action check enumerates 2^n cosets");
    let generators: Vec<AffineMap> = (0..n)
        .map(|i| affine_generator(a, i).expect("index in range"))
        .collect();
    (1u64..1 << n).all(|eps| {
        let g = generators
            .iter()
            .enumerate()
            .filter(|(i, _)| eps >> i & 1 == 1)
            .fold(AffineMap::identity(n), |acc, (_, s)| {
                acc.compose(s).expect("same size")
            });
        g.coset_fixed_point_free()
    })
}

impl AffineMap {
    /// True when some `+1` coordinate has non-integer translation, so neither
    /// this map nor any lattice translate of it has a fixed point.
    pub fn coset_fixed_point_free(&self) -> bool {
        (0..self.size()).any(|j| self.sign(j) > 0 && !self.translation[j].is_integer())
    }

    /// `u ↦ u + e_i`.
    pub fn unit_translation(n: usize, i: usize) -> Self {
        let mut t = alloc::vec![Rational::zero(); n];
        t[i] = Rational::one();
        Self::translation(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn klein() -> BottMatrix {
        BottMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap()
    }

    #[test]
    fn klein_affine_generator() {
        let s = affine_generator(&klein(), 0).unwrap();
        assert_eq!(s.linear_signs(), vec![1, -1]);
        assert_eq!(s.translation_part(), &[q(1, 2), q(0, 1)]);
        assert_eq!(s.compose(&s).unwrap(), AffineMap::unit_translation(2, 0));
    }

    #[test]
    fn composition_and_application() {
        let s = affine_generator(&klein(), 0).unwrap();
        let id = AffineMap::identity(2);
        assert_eq!(s.compose(&id).unwrap(), s);
        assert_eq!(id.compose(&s).unwrap(), s);
        assert_eq!(s.apply(&[q(0, 1), q(0, 1)]).unwrap(), s.translation_part());
        assert_eq!(
            s.apply(&[q(1, 3), q(1, 5)]).unwrap(),
            vec![q(5, 6), q(-1, 5)]
        );
        assert!(s.compose(&AffineMap::identity(3)).is_err());
        assert!(s.apply(&[q(0, 1)]).is_err());
    }

    #[test]
    fn composition_matches_application() {
        let a = BottMatrix::from_rows(&[[0, 1, 1], [0, 0, 1], [0, 0, 0]]).unwrap();
        let s0 = affine_generator(&a, 0).unwrap();
        let s1 = affine_generator(&a, 1).unwrap();
        let u = [q(1, 3), q(2, 7), q(-5, 11)];
        let lhs = s0.compose(&s1).unwrap().apply(&u).unwrap();
        let rhs = s0.apply(&s1.apply(&u).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_actions() {
        assert!(verify_free_action(&BottMatrix::zero(4).unwrap()));
        assert!(verify_free_action(&klein()));
        let reflection = AffineMap::new(&[-1], vec![q(1, 2)]).unwrap();
        assert_eq!(reflection.apply(&[q(1, 4)]).unwrap(), vec![q(1, 4)]);
        assert!(!reflection.coset_fixed_point_free());
        assert!(!AffineMap::unit_translation(2, 1).coset_fixed_point_free());
    }
}
