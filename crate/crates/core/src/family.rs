//! Bijective enumeration of all `n × n` strictly upper-triangular (0,1) matrices.
//!
//! Counter bit `b` fills the `b`-th strictly-upper slot in row-major order:
//! `(0,1), (0,2), …, (0,n-1), (1,2), …`. Shards are contiguous counter ranges.

use core::ops::Range;

use crate::matrix::BottMatrix;
use crate::{Error, Result};

/// Largest size whose `n(n-1)/2` slots fit in a `u64` counter.
pub const MAX_FAMILY_SIZE: usize = 11;

pub fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `2^{n(n-1)/2}`, the number of matrices of size `n`.
pub fn family_size(n: usize) -> Result<u64> {
    if n > MAX_FAMILY_SIZE {
        return Err(Error::TooLarge {
            size: n,
            max: MAX_FAMILY_SIZE,
        });
    }
    Ok(1u64 << slot_count(n))
}

/// `(row, column)` of every slot, indexed by counter bit.
fn slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Writes the column words of the matrix with the given counter into `columns[..n]`.
pub fn decode_columns(n: usize, counter: u64, columns: &mut [u64]) {
    columns[..n].fill(0);
    for (b, (i, j)) in slots(n).enumerate() {
        if counter >> b & 1 == 1 {
            columns[j] |= 1 << i;
        }
    }
}

pub fn decode(n: usize, counter: u64) -> Result<BottMatrix> {
    let total = family_size(n)?;
    if counter >= total {
        return Err(Error::IndexOutOfRange {
            index: counter as usize,
            len: total as usize,
        });
    }
    let mut columns = alloc::vec![0u64; n];
    decode_columns(n, counter, &mut columns);
    BottMatrix::from_columns(columns)
}

pub fn encode(a: &BottMatrix) -> Result<u64> {
    let n = a.size();
    family_size(n)?;
    Ok(slots(n)
        .enumerate()
        .filter(|&(_, (i, j))| a.entry(i, j))
        .fold(0u64, |c, (b, _)| c | 1 << b))
}

/// Part `index` of `count` near-equal contiguous parts of the counter range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn range(self, total: u64) -> Range<u64> {
        let bound = |k: usize| (total as u128 * k as u128 / self.count as u128) as u64;
        bound(self.index)..bound(self.index + 1)
    }
}

/// A position in the enumeration that steps to the next counter by flipping
/// only the slots whose counter bits change (two on average).
#[derive(Clone, Debug)]
pub struct FamilyCursor {
    n: usize,
    counter: u64,
    end: u64,
    columns: [u64; MAX_FAMILY_SIZE],
    slot_col: [u8; 64],
    slot_row: [u8; 64],
}

impl FamilyCursor {
    pub fn new(n: usize, shard: Shard) -> Result<Self> {
        let total = family_size(n)?;
        if shard.count == 0 || shard.index >= shard.count {
            return Err(Error::IndexOutOfRange {
                index: shard.index,
                len: shard.count,
            });
        }
        let range = shard.range(total);
        let mut slot_col = [0u8; 64];
        let mut slot_row = [0u8; 64];
        for (b, (i, j)) in slots(n).enumerate() {
            slot_row[b] = i as u8;
            slot_col[b] = j as u8;
        }
        let mut columns = [0u64; MAX_FAMILY_SIZE];
        decode_columns(n, range.start, &mut columns);
        Ok(Self {
            n,
            counter: range.start,
            end: range.end,
            columns,
            slot_col,
            slot_row,
        })
    }

    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn is_done(&self) -> bool {
        self.counter >= self.end
    }

    /// Column words of the current matrix.
    pub fn columns(&self) -> &[u64] {
        &self.columns[..self.n]
    }

    pub fn matrix(&self) -> BottMatrix {
        BottMatrix::from_columns(self.columns().to_vec()).expect("cursor columns are upper")
    }

    pub fn advance(&mut self) {
        let next = self.counter + 1;
        let mut flipped = self.counter ^ next;
        self.counter = next;
        if next >= self.end {
            return;
        }
        while flipped != 0 {
            let b = flipped.trailing_zeros() as usize;
            flipped &= flipped - 1;
            self.columns[self.slot_col[b] as usize] ^= 1 << self.slot_row[b];
        }
    }
}

/// Iterator over the matrices of one shard.
pub fn iterate_family(n: usize, shard: Shard) -> Result<impl Iterator<Item = BottMatrix>> {
    let mut cursor = FamilyCursor::new(n, shard)?;
    Ok(core::iter::from_fn(move || {
        if cursor.is_done() {
            return None;
        }
        let a = cursor.matrix();
        cursor.advance();
        Some(a)
    }))
}
