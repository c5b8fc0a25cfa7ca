use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index fell outside `0..len`.
    IndexOutOfRange { index: usize, len: usize },
    /// Two objects that must share a size did not.
    SizeMismatch { expected: usize, found: usize },
    /// A nonzero entry on or below the diagonal.
    NotStrictlyUpper { row: usize, col: usize },
    /// An entry other than 0 or 1.
    NotBinary { row: usize, col: usize, value: u8 },
    /// A size the representation cannot hold.
    TooLarge { size: usize, max: usize },
    /// The matrix does not define a symplectic manifold.
    NotSymplectic,
    /// A pairing that is not a perfect matching of equal columns.
    InvalidPairing(&'static str),
    /// A 2-form coefficient on a pair of unequal columns.
    NonInvariantCoefficient { j: usize, k: usize },
    /// A coefficient supplied for something other than a degree-2 monomial.
    NotDegreeTwo { degree: usize },
    /// The 2-form (or its restriction to a block) is degenerate.
    Degenerate,
    /// A nonzero 2-form coefficient on `du_j ∧ du_j`.
    DiagonalCoefficient { index: usize },
    /// The 2-form is not preserved by every generator `s_i`.
    NotInvariant,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for size {len}")
            }
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::NotStrictlyUpper { row, col } => write!(
                f,
                "entry ({row}, {col}) is on or below the diagonal but nonzero"
            ),
            Error::NotBinary { row, col, value } => {
                write!(f, "entry ({row}, {col}) is {value}, expected 0 or 1")
            }
            Error::TooLarge { size, max } => write!(f, "size {size} exceeds the limit {max}"),
            Error::NotSymplectic => f.write_str("columns cannot be paired into equal pairs"),
            Error::InvalidPairing(why) => write!(f, "invalid pairing: {why}"),
            Error::NonInvariantCoefficient { j, k } => write!(
                f,
                "coefficient on ({j}, {k}) but columns {j} and {k} differ"
            ),
            Error::NotDegreeTwo { degree } => {
                write!(f, "expected a degree-2 monomial, got degree {degree}")
            }
            Error::Degenerate => f.write_str("2-form is degenerate"),
            Error::DiagonalCoefficient { index } => {
                write!(
                    f,
                    "2-form coefficient on the diagonal entry ({index}, {index})"
                )
            }
            Error::NotInvariant => {
                f.write_str("2-form is not invariant under the affine generators")
            }
        }
    }
}

impl core::error::Error for Error {}
