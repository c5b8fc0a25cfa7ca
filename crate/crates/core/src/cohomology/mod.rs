//! De Rham cohomology of `M(A)` as the `G(A)`-invariant part of the exterior
//! algebra `H*(T^n) = Λ[du_1, …, du_n]`.
//!
//! The generator `a_i` acts on `[du_j]` by the sign `(-1)^{A[i][j]}`, so a
//! monomial `du_J` is invariant iff the GF(2) sum of the columns in `J`
//! vanishes. Invariant monomials form a basis of `H*(M(A))`.

mod exterior;
mod invariants;
mod monomial;
mod oracle;

pub use exterior::{Coefficient, ExteriorElement};
pub use invariants::{
    betti, generator_sign_action, invariant_basis, is_invariant_monomial, poincare_polynomial,
    BettiVector,
};
pub use monomial::Monomial;
pub use oracle::{
    alpha_power, is_cohomologically_symplectic, is_cohomologically_symplectic_randomized,
    perfect_invariant_matching, RANDOM_COEFFICIENT_MAX, RANDOM_TRIALS,
};
