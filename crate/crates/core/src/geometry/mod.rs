//! The flat models `M(A) = T^n / G(A) = R^n / Γ(A)` and the structures they carry.
//!
//! Torus points are angles `u ∈ [0,1)` with `z = exp(2π√-1 u)`, so negating
//! `z` is `u ↦ u + 1/2` and conjugating is `u ↦ -u`, both exact over the
//! rationals.

mod affine;
mod darboux;
mod flux;
mod form;
mod kahler;
mod torus;

pub use affine::{affine_generator, verify_free_action, AffineMap};
pub use darboux::{
    congruence, darboux_basis, standard_form, symplectic_gram_schmidt, DarbouxBasis,
};
pub use flux::{flux_group, FluxData, FluxGenerator};
pub use form::{
    build_symplectic_form, nondegenerate, pullback, verify_invariance, FormSource, TwoForm,
};
pub use kahler::{kahler_structure, GeneratorCase, KahlerData};
pub use torus::{exp_map, torus_generator, TorusInvolution, TorusPoint};

use crate::Rational;

/// `x - floor(x)`, in `[0, 1)`.
pub(crate) fn frac(x: &Rational) -> Rational {
    x - x.floor()
}
