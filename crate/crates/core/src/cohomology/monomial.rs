use core::cmp::Ordering;
use core::fmt;

use crate::matrix::MAX_SIZE;

/// `du_J = du_{j_1} ∧ … ∧ du_{j_k}` for `J = {j_1 < … < j_k}`, stored as a bit set.
///
/// Ordered by degree, then lexicographically on the sorted index lists, so
/// `{0,3} < {1,2}` and `{0} < {0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    /// Panics on an index `>= 64`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Monomial(indices.into_iter().fold(0u64, |m, j| {
            assert!(j < MAX_SIZE, "monomial index {j} out of range");
            m | 1 << j
        }))
    }

    pub fn generator(j: usize) -> Self {
        Self::from_indices([j])
    }

    /// The top monomial `du_0 ∧ … ∧ du_{n-1}`.
    pub fn top(n: usize) -> Self {
        Monomial(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, j: usize) -> bool {
        j < 64 && self.0 >> j & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(j)
        })
    }

    /// `du_J ∧ du_K = sign · du_{J∪K}`, or `None` when `J ∩ K ≠ ∅`.
    ///
    /// The sign is `(-1)^{#{(j,k) ∈ J×K : j > k}}`.
    pub fn wedge(self, other: Monomial) -> Option<(bool, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let inversions: u32 = other
            .indices()
            .map(|k| {
                let above = if k >= 63 { 0 } else { !((1u64 << (k + 1)) - 1) };
                (self.0 & above).count_ones()
            })
            .sum();
        Some((inversions % 2 == 1, Monomial(self.0 | other.0)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // self holds the smallest index where they differ
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("du{")?;
        for (n, j) in self.indices().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}
