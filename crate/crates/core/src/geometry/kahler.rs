//! Complex coordinates `z_k = u_{j_k} + √-1 u_{j_{k+n}}` from a column pairing.
//!
//! In these coordinates each `s_i` acts on `z_k` by a translation by `1/2`
//! or `√-1/2`, the identity, or `z_k ↦ -z_k`. All four are holomorphic
//! isometries of the standard Hermitian metric, so the flat Kähler structure
//! on `C^n` descends to `M(A)`.

use alloc::vec::Vec;

use crate::criteria::Pairing;
use crate::matrix::BottMatrix;
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorCase {
    /// `z_k ↦ z_k + 1/2`, when `i = j_k`.
    ShiftReal,
    /// `z_k ↦ z_k + √-1/2`, when `i = j_{k+n}`.
    ShiftImaginary,
    /// `z_k ↦ z_k`.
    Identity,
    /// `z_k ↦ -z_k`.
    Negation,
}

impl GeneratorCase {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorCase::ShiftReal => "shift-by-1/2",
            GeneratorCase::ShiftImaginary => "shift-by-i/2",
            GeneratorCase::Identity => "identity",
            GeneratorCase::Negation => "negation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerData {
    pairing: Pairing,
    /// `cases[i][k]`: how `s_i` acts on `z_k`.
    cases: Vec<Vec<GeneratorCase>>,
}

impl KahlerData {
    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn complex_dimension(&self) -> usize {
        self.pairing.len()
    }

    pub fn case(&self, generator: usize, k: usize) -> GeneratorCase {
        self.cases[generator][k]
    }

    pub fn cases(&self, generator: usize) -> &[GeneratorCase] {
        &self.cases[generator]
    }

    /// Real coordinates `u` to `(Re z_k, Im z_k)`.
    pub fn to_complex(&self, u: &[Rational]) -> Vec<(Rational, Rational)> {
        self.pairing
            .pairs()
            .iter()
            .map(|&(re, im)| (u[re].clone(), u[im].clone()))
            .collect()
    }

    /// Applies `s_generator` in complex coordinates using the case table.
    pub fn act(&self, generator: usize, z: &[(Rational, Rational)]) -> Vec<(Rational, Rational)> {
        let half = Rational::new(1.into(), 2.into());
        z.iter()
            .zip(&self.cases[generator])
            .map(|((re, im), case)| match case {
                GeneratorCase::ShiftReal => (re + &half, im.clone()),
                GeneratorCase::ShiftImaginary => (re.clone(), im + &half),
                GeneratorCase::Identity => (re.clone(), im.clone()),
                GeneratorCase::Negation => (-re.clone(), -im.clone()),
            })
            .collect()
    }
}

/// Tabulates the action of every `s_i` on every `z_k`.
///
/// Outside the two shift cases, `A[i][j_k] = A[i][j_{k+n}]` holds because
/// paired columns are equal; a violation is reported as an invalid pairing.
pub fn kahler_structure(a: &BottMatrix, pairing: &Pairing) -> Result<KahlerData> {
    pairing.validate_for(a)?;
    let cases = (0..a.size())
        .map(|i| {
            pairing
                .pairs()
                .iter()
                .map(|&(re, im)| {
                    if i == re {
                        Ok(GeneratorCase::ShiftReal)
                    } else if i == im {
                        Ok(GeneratorCase::ShiftImaginary)
                    } else {
                        match (a.entry(i, re), a.entry(i, im)) {
                            (false, false) => Ok(GeneratorCase::Identity),
                            (true, true) => Ok(GeneratorCase::Negation),
                            _ => Err(Error::InvalidPairing("paired columns differ")),
                        }
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KahlerData {
        pairing: pairing.clone(),
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::affine_generator;
    use GeneratorCase::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn example() -> BottMatrix {
        BottMatrix::from_rows(&[[0, 1, 1, 0], [0; 4], [0; 4], [0; 4]]).unwrap()
    }

    #[test]
    fn torus_case_table() {
        let zero = BottMatrix::zero(4).unwrap();
        let p = Pairing::new(4, vec![(0, 2), (1, 3)]).unwrap();
        let k = kahler_structure(&zero, &p).unwrap();
        assert_eq!(k.cases(0), &[ShiftReal, Identity]);
        assert_eq!(k.cases(3), &[Identity, ShiftImaginary]);
    }

    #[test]
    fn example_case_table() {
        let a = example();
        let p = Pairing::new(4, vec![(0, 3), (1, 2)]).unwrap();
        let k = kahler_structure(&a, &p).unwrap();
        assert_eq!(k.cases(0), &[ShiftReal, Negation]);
        assert_eq!(k.cases(3), &[ShiftImaginary, Identity]);
        assert_eq!(k.cases(1), &[Identity, ShiftReal]);
        assert_eq!(k.cases(2), &[Identity, ShiftImaginary]);
    }

    #[test]
    fn case_table_reproduces_affine_action() {
        let a = example();
        let p = Pairing::new(4, vec![(0, 3), (1, 2)]).unwrap();
        let k = kahler_structure(&a, &p).unwrap();
        let u = [q(1, 3), q(-2, 5), q(7, 4), q(1, 9)];
        for i in 0..4 {
            let s = affine_generator(&a, i).unwrap();
            assert_eq!(
                k.act(i, &k.to_complex(&u)),
                k.to_complex(&s.apply(&u).unwrap())
            );
        }
    }

    #[test]
    fn invalid_pairing_is_rejected() {
        let p = Pairing::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(kahler_structure(&example(), &p).is_err());
    }
}
