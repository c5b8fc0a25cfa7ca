//! Strictly upper-triangular (0,1) matrices and their GF(2) columns.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::{Error, Result};

/// Largest supported matrix size; columns and monomials are single `u64` words.
pub const MAX_SIZE: usize = 64;

/// A vector over GF(2) of length at most [`MAX_SIZE`]; bit `i` is entry `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColumnVector {
    bits: u64,
    len: u8,
}

impl ColumnVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_SIZE);
        Self {
            bits: 0,
            len: len as u8,
        }
    }

    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_SIZE);
        debug_assert!(len == MAX_SIZE || bits >> len == 0);
        Self {
            bits,
            len: len as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len() && (self.bits >> i) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

impl Add for ColumnVector {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for ColumnVector {
    fn add_assign(&mut self, rhs: Self) {
        assert_eq!(self.len, rhs.len, "GF(2) vectors of different length");
        self.bits ^= rhs.bits;
    }
}

impl fmt::Debug for ColumnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// An `n × n` strictly upper-triangular (0,1) matrix `A`.
///
/// Stored column-major: `columns[j]` has bit `i` set iff `A[i][j] = 1`, so
/// column equality is a single word comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BottMatrix {
    columns: Vec<u64>,
}

impl BottMatrix {
    pub fn zero(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(Self {
            columns: alloc::vec![0; size],
        })
    }

    /// Builds a matrix from column words, rejecting bits on or below the diagonal.
    pub fn from_columns(columns: Vec<u64>) -> Result<Self> {
        check_size(columns.len())?;
        for (j, &col) in columns.iter().enumerate() {
            let below = if j >= 64 { 0 } else { col >> j };
            if below != 0 {
                let row = j + below.trailing_zeros() as usize;
                return Err(Error::NotStrictlyUpper { row, col: j });
            }
        }
        Ok(Self { columns })
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let size = rows.len();
        check_size(size)?;
        let mut columns = alloc::vec![0u64; size];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for (j, &value) in row.iter().enumerate() {
                match value {
                    0 => {}
                    1 if j > i => columns[j] |= 1 << i,
                    1 => return Err(Error::NotStrictlyUpper { row: i, col: j }),
                    _ => {
                        return Err(Error::NotBinary {
                            row: i,
                            col: j,
                            value,
                        })
                    }
                }
            }
        }
        Ok(Self { columns })
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    /// Entry `A[i][j]`; out-of-range entries read as 0.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        j < self.size() && i < self.size() && (self.columns[j] >> i) & 1 == 1
    }

    pub fn column(&self, j: usize) -> Result<ColumnVector> {
        self.columns
            .get(j)
            .map(|&bits| ColumnVector::from_bits(self.size(), bits))
            .ok_or(Error::IndexOutOfRange {
                index: j,
                len: self.size(),
            })
    }

    /// Raw column words, bit `i` of word `j` being `A[i][j]`.
    pub fn column_words(&self) -> &[u64] {
        &self.columns
    }

    /// Row `i` as a bit mask over columns.
    pub fn row_mask(&self, i: usize) -> Result<u64> {
        if i >= self.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.size(),
            });
        }
        Ok(self
            .columns
            .iter()
            .enumerate()
            .filter(|(_, &c)| (c >> i) & 1 == 1)
            .fold(0u64, |m, (j, _)| m | 1 << j))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|&c| c == 0)
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.size()).map(move |i| {
            (0..self.size())
                .map(|j| u8::from(self.entry(i, j)))
                .collect()
        })
    }
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_SIZE {
        return Err(Error::TooLarge {
            size,
            max: MAX_SIZE,
        });
    }
    Ok(())
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for BottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BottMatrix[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> BottMatrix {
        BottMatrix::from_rows(&[[0, 1], [0, 0]]).unwrap()
    }

    #[test]
    fn columns_of_klein_bottle() {
        let a = klein();
        assert_eq!(a.column(0).unwrap(), ColumnVector::zero(2));
        assert_eq!(a.column(1).unwrap(), ColumnVector::from_bits(2, 0b01));
        assert_eq!(
            a.column(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn example_column_three() {
        let a = BottMatrix::from_rows(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]]).unwrap();
        let c = a.column(2).unwrap();
        assert_eq!(format!("{c:?}"), "(1,0,0,0)");
    }

    #[test]
    fn rejects_lower_and_diagonal_entries() {
        assert_eq!(
            BottMatrix::from_rows(&[[1, 0], [0, 0]]),
            Err(Error::NotStrictlyUpper { row: 0, col: 0 })
        );
        assert_eq!(
            BottMatrix::from_rows(&[[0, 0], [1, 0]]),
            Err(Error::NotStrictlyUpper { row: 1, col: 0 })
        );
        assert_eq!(
            BottMatrix::from_rows(&[[0, 2], [0, 0]]),
            Err(Error::NotBinary {
                row: 0,
                col: 1,
                value: 2
            })
        );
        assert!(BottMatrix::from_columns(vec![0, 0b10]).is_err());
    }

    #[test]
    fn column_addition_is_xor() {
        let x = ColumnVector::from_bits(3, 0b101);
        let y = ColumnVector::from_bits(3, 0b011);
        assert_eq!(x + y, ColumnVector::from_bits(3, 0b110));
        assert!((x + x).is_zero());
    }

    #[test]
    fn rows_and_display() {
        let a = klein();
        assert_eq!(a.row_mask(0).unwrap(), 0b10);
        assert_eq!(a.to_string(), "0 1\n0 0");
        assert_eq!(format!("{a:?}"), "BottMatrix[01;00]");
    }
}
