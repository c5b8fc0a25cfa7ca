//! Combinatorial predicates on `A`: orientability, column pairing, flux rank.
//!
//! `M(A)` is symplectic iff the column indices split into pairs `{j, k}` with
//! `A_j = A_k`. Column equality is an equivalence relation, so such a pairing
//! exists iff every distinct column value occurs an even number of times.

use alloc::vec::Vec;

use crate::matrix::{BottMatrix, MAX_SIZE};
use crate::{Error, Result};

/// Every row sum vanishes mod 2. The row-parity vector is the XOR of all columns.
pub fn columns_orientable(columns: &[u64]) -> bool {
    columns.iter().fold(0, |acc, &c| acc ^ c) == 0
}

/// Every distinct column word occurs an even number of times.
pub fn columns_pair_up(columns: &[u64]) -> bool {
    if columns.len() % 2 == 1 {
        return false;
    }
    let mut sorted = [0u64; MAX_SIZE];
    let sorted = &mut sorted[..columns.len()];
    sorted.copy_from_slice(columns);
    sorted.sort_unstable();
    sorted.chunks_exact(2).all(|p| p[0] == p[1])
}

pub fn is_orientable(a: &BottMatrix) -> bool {
    columns_orientable(a.column_words())
}

/// Odd sizes are never symplectic.
pub fn is_symplectic(a: &BottMatrix) -> bool {
    columns_pair_up(a.column_words())
}

/// Number of zero columns, which is `dim H^1(M(A))`.
pub fn flux_rank(a: &BottMatrix) -> usize {
    a.column_words().iter().filter(|&&c| c == 0).count()
}

/// A perfect matching `{j_k, j_{k+n}}` of the column indices `0..2n`.
///
/// Pairs are stored as `(j_k, j_{k+n})` and kept in the order given; the
/// `k`-th pair defines the complex coordinate `z_k = u_{j_k} + i u_{j_{k+n}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    size: usize,
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    /// Checks that the pairs are disjoint and cover `0..size`.
    pub fn new(size: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if size > MAX_SIZE {
            return Err(Error::TooLarge {
                size,
                max: MAX_SIZE,
            });
        }
        if pairs.len() * 2 != size {
            return Err(Error::InvalidPairing("pair count is not half the size"));
        }
        let mut seen = 0u64;
        for &(j, k) in &pairs {
            for idx in [j, k] {
                if idx >= size {
                    return Err(Error::IndexOutOfRange {
                        index: idx,
                        len: size,
                    });
                }
                if seen >> idx & 1 == 1 {
                    return Err(Error::InvalidPairing("index used twice"));
                }
                seen |= 1 << idx;
            }
        }
        Ok(Self { size, pairs })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of pairs, the complex dimension.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Checks the pairing against `a`: matching sizes and equal columns in every pair.
    pub fn validate_for(&self, a: &BottMatrix) -> Result<()> {
        if a.size() != self.size {
            return Err(Error::SizeMismatch {
                expected: a.size(),
                found: self.size,
            });
        }
        let cols = a.column_words();
        if self.pairs.iter().any(|&(j, k)| cols[j] != cols[k]) {
            return Err(Error::InvalidPairing("paired columns differ"));
        }
        Ok(())
    }
}

/// Pairs consecutive indices within each equal-column class, classes ordered
/// by their smallest index. `None` iff `a` is not symplectic.
pub fn find_pairing(a: &BottMatrix) -> Option<Pairing> {
    if !is_symplectic(a) {
        return None;
    }
    let cols = a.column_words();
    let mut open: Vec<Option<usize>> = alloc::vec![None; a.size()];
    let mut pairs = Vec::with_capacity(a.size() / 2);
    for j in 0..a.size() {
        // first index holding the same column word
        let leader = cols.iter().position(|&c| c == cols[j]).unwrap_or(j);
        match open[leader].take() {
            Some(i) => pairs.push((i, j)),
            None => open[leader] = Some(j),
        }
    }
    pairs.sort_unstable();
    Some(Pairing {
        size: a.size(),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[[u8; 4]]) -> BottMatrix {
        BottMatrix::from_rows(rows).unwrap()
    }

    fn non_symplectic_example() -> BottMatrix {
        m(&[[0, 1, 1, 0], [0, 0, 1, 1], [0; 4], [0; 4]])
    }

    #[test]
    fn orientability() {
        assert!(is_orientable(&BottMatrix::zero(5).unwrap()));
        assert!(!is_orientable(
            &BottMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap()
        ));
        assert!(is_orientable(&non_symplectic_example()));
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic(&BottMatrix::zero(4).unwrap()));
        assert!(!is_symplectic(&BottMatrix::zero(3).unwrap()));
        assert!(!is_symplectic(&non_symplectic_example()));
        assert!(find_pairing(&non_symplectic_example()).is_none());
    }

    #[test]
    fn pairing_tie_break() {
        let zero = find_pairing(&BottMatrix::zero(4).unwrap()).unwrap();
        assert_eq!(zero.pairs(), &[(0, 1), (2, 3)]);
        let a = m(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]]);
        let p = find_pairing(&a).unwrap();
        assert_eq!(p.pairs(), &[(0, 3), (1, 2)]);
        p.validate_for(&a).unwrap();
    }

    #[test]
    fn flux_rank_counts_zero_columns() {
        assert_eq!(flux_rank(&BottMatrix::zero(6).unwrap()), 6);
        assert_eq!(flux_rank(&m(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]])), 2);
        assert_eq!(
            flux_rank(&BottMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap()),
            1
        );
    }

    #[test]
    fn pairing_rejects_bad_input() {
        assert!(Pairing::new(4, vec![(0, 1)]).is_err());
        assert!(Pairing::new(4, vec![(0, 1), (1, 2)]).is_err());
        assert!(Pairing::new(4, vec![(0, 1), (2, 4)]).is_err());
        let p = Pairing::new(4, vec![(0, 2), (1, 3)]).unwrap();
        let a = m(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]]);
        assert_eq!(
            p.validate_for(&a),
            Err(Error::InvalidPairing("paired columns differ"))
        );
    }
}
