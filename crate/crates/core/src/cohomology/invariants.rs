use alloc::vec::Vec;

use super::Monomial;
use crate::matrix::BottMatrix;
use crate::Result;

/// Signs of `a_i^*` on `[du_0], …, [du_{n-1}]`: `-1` where `A[i][j] = 1`.
pub fn generator_sign_action(a: &BottMatrix, i: usize) -> Result<Vec<i8>> {
    let row = a.row_mask(i)?;
    Ok((0..a.size())
        .map(|j| if row >> j & 1 == 1 { -1 } else { 1 })
        .collect())
}

/// `du_J` is `G(A)`-invariant iff `Σ_{j∈J} A_j = 0` over GF(2). Monomials
/// mentioning an index `>= n` are not part of the algebra and return false.
pub fn is_invariant_monomial(a: &BottMatrix, monomial: Monomial) -> bool {
    let n = a.size();
    if n < 64 && monomial.bits() >> n != 0 {
        return false;
    }
    let cols = a.column_words();
    monomial.indices().fold(0u64, |acc, j| acc ^ cols[j]) == 0
}

/// Invariant monomials of degree `k`, in lexicographic order of index lists.
/// Empty when `k > n`.
pub fn invariant_basis(a: &BottMatrix, k: usize) -> Vec<Monomial> {
    let n = a.size();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let cols = a.column_words();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if idx.iter().fold(0u64, |acc, &j| acc ^ cols[j]) == 0 {
            out.push(Monomial::from_indices(idx.iter().copied()));
        }
        // advance to the next k-combination in lexicographic order
        let Some(p) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    out
}

/// Betti numbers `b_0, …, b_n` of `M(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl From<BettiVector> for Vec<u64> {
    fn from(b: BettiVector) -> Self {
        b.0
    }
}

/// Counts invariant monomials by degree over all `2^n` subsets.
///
/// Walks subsets in Gray-code order so each step is one column XOR.
pub fn betti(a: &BottMatrix) -> BettiVector {
    let n = a.size();
    assert!(n < 64, "betti enumerates 2^n subsets");
    let cols = a.column_words();
    let mut counts = alloc::vec![0u64; n + 1];
    let mut sum = 0u64;
    let mut subset = 0u64;
    counts[0] = 1;
    for step in 1u64..(1u64 << n) {
        let j = step.trailing_zeros() as usize;
        subset ^= 1 << j;
        sum ^= cols[j];
        if sum == 0 {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    BettiVector(counts)
}

/// Coefficients of `Σ b_k t^k`, lowest degree first.
pub fn poincare_polynomial(a: &BottMatrix) -> Vec<u64> {
    betti(a).into()
}

/// Binomial coefficient; used by the `b_k <= C(n, k)` bound checks.
#[cfg(test)]
fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
