use alloc::vec::Vec;

use num_rational::BigRational;

use super::frac;
use crate::matrix::BottMatrix;
use crate::{Error, Rational, Result};

/// A point of `T^n` as angles in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint(Vec<Rational>);

impl TorusPoint {
    /// Reduces each angle mod 1.
    pub fn from_angles(angles: Vec<Rational>) -> Self {
        TorusPoint(angles.iter().map(frac).collect())
    }

    pub fn angles(&self) -> &[Rational] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

/// `u ↦ exp(2π√-1 u)` coordinatewise.
pub fn exp_map(u: &[Rational]) -> TorusPoint {
    TorusPoint::from_angles(u.to_vec())
}

/// `a_i`: negate `z_i` and conjugate `z_j` for each `j > i` with `A[i][j] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusInvolution {
    index: usize,
    size: usize,
    conjugated: u64,
}

impl TorusInvolution {
    pub fn index(&self) -> usize {
        self.index
    }

    /// Bit `j` set iff `z_j` is conjugated.
    pub fn conjugation_mask(&self) -> u64 {
        self.conjugated
    }

    pub fn apply(&self, p: &TorusPoint) -> Result<TorusPoint> {
        if p.dimension() != self.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: p.dimension(),
            });
        }
        let half = BigRational::new(1.into(), 2.into());
        Ok(TorusPoint::from_angles(
            p.angles()
                .iter()
                .enumerate()
                .map(|(j, u)| {
                    if j == self.index {
                        u + &half
                    } else if self.conjugated >> j & 1 == 1 {
                        -u
                    } else {
                        u.clone()
                    }
                })
                .collect(),
        ))
    }
}

pub fn torus_generator(a: &BottMatrix, i: usize) -> Result<TorusInvolution> {
    Ok(TorusInvolution {
        index: i,
        size: a.size(),
        conjugated: a.row_mask(i)?,
    })
}
