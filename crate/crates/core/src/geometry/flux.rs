//! Flux of the coordinate circle actions on a symplectic `M(A)`.
//!
//! `H^1(M(A))` is spanned by `[du_j]` with `A_j = 0`. Rotating any such
//! coordinate descends to `M(A)` and is a symplectic isotopy; in a Darboux
//! basis of the zero-column block its flux is `±[du'_q]` with `q = p ± r`.
//! These fluxes span `H^1`, so the flux group has full rank. The isotopy
//! speed is fixed only up to a nonzero constant, so the generators are
//! directions, not a specific lattice basis.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::darboux::{darboux_basis, DarbouxBasis};
use super::form::{nondegenerate, TwoForm};
use crate::criteria::{flux_rank, is_symplectic};
use crate::linalg;
use crate::matrix::BottMatrix;
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FluxGenerator {
    /// Darboux index `p` of the isotopy direction.
    pub darboux_index: usize,
    /// `q` with flux `sign · [du'_q]` in Darboux coordinates.
    pub partner: usize,
    pub sign: i8,
    /// Generating vector field `X_p` in the original coordinates `u`.
    pub direction: Vec<Rational>,
    /// `[i_{X_p} ω]` as coefficients on `[du_0], …, [du_{n-1}]`.
    pub class: Vec<Rational>,
}

impl FluxGenerator {
    /// `(j, c)` when the class is `c · [du_j]` for a single `j`.
    pub fn monomial(&self) -> Option<(usize, Rational)> {
        let mut nonzero = self.class.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (j, c) = nonzero.next()?;
        nonzero.next().is_none().then(|| (j, c.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FluxData {
    pub rank: usize,
    pub generators: Vec<FluxGenerator>,
    pub darboux: DarbouxBasis,
    /// Generators are determined only up to a nonzero scale each.
    pub scale_ambiguous: bool,
}

impl FluxData {
    /// Dimension of the span of the generator classes.
    pub fn span_rank(&self) -> usize {
        let classes: Vec<Vec<Rational>> = self.generators.iter().map(|g| g.class.clone()).collect();
        linalg::rank(&classes)
    }
}

pub fn flux_group(a: &BottMatrix, form: &TwoForm) -> Result<FluxData> {
    if !is_symplectic(a) {
        return Err(Error::NotSymplectic);
    }
    if !nondegenerate(form) {
        return Err(Error::Degenerate);
    }
    let darboux = darboux_basis(a, form)?;
    let n = a.size();
    let c = form.skew_matrix();
    let r = darboux.half_rank();
    let generators = (0..2 * r)
        .map(|p| {
            let direction = darboux.basis_vector(p, n);
            let class: Vec<Rational> = (0..n)
                .map(|k| {
                    direction
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .fold(Rational::zero(), |acc, (j, x)| acc + x * &c[j][k])
                })
                .collect();
            // ω(X_p, X_m) over m picks out the Darboux partner
            let on_basis: Vec<Rational> = (0..2 * r)
                .map(|m| form.evaluate(&direction, &darboux.basis_vector(m, n)))
                .collect();
            let partner = on_basis
                .iter()
                .position(|x| !x.is_zero())
                .expect("Darboux basis pairs every vector");
            let sign = if on_basis[partner] == Rational::one() {
                1
            } else {
                -1
            };
            FluxGenerator {
                darboux_index: p,
                partner,
                sign,
                direction,
                class,
            }
        })
        .collect();
    Ok(FluxData {
        rank: flux_rank(a),
        generators,
        darboux,
        scale_ambiguous: true,
    })
}
