//! Real Bott manifolds `M(A)` from their defining strictly upper-triangular
//! (0,1) matrices.
//!
//! The crate decides orientability, symplecticness and Kähler-ness of `M(A)`,
//! computes its de Rham cohomology as the invariant subring of the exterior
//! algebra on `n` generators, and builds explicit symplectic forms, Kähler
//! coordinates and flux data from the flat affine model `R^n / Γ(A)`.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`). All
//! indices in this API are 0-based.
//!
//! * [`matrix`] and [`criteria`]: the matrix type, GF(2) columns and the
//!   combinatorial predicates.
//! * [`cohomology`]: exact exterior algebra, invariant monomials, Betti
//!   numbers and the cohomological-symplecticness oracles.
//! * [`geometry`]: torus involutions, affine generators, symplectic forms,
//!   Kähler case tables, Darboux normal form and flux data.
//! * [`family`]: bijective enumeration of all matrices of a given size.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cohomology;
pub mod criteria;
mod error;
pub mod family;
pub mod geometry;
mod linalg;
pub mod matrix;

pub use error::{Error, Result};
pub use matrix::{BottMatrix, ColumnVector};

/// Exact rational numbers used for form coefficients, translations and points.
pub type Rational = num_rational::BigRational;
