//! Cohomological symplecticness: is there `α ∈ H^2(M(A))` with `α^n ≠ 0`?
//!
//! With formal coefficients on the invariant degree-2 monomials,
//! `α^n = n! · Pf(C) · du_{0..2n}`, and every perfect matching of the
//! invariant-pair graph contributes its own distinct monomial in the
//! coefficients. So `α^n` is not identically zero iff that graph has a
//! perfect matching. [`is_cohomologically_symplectic`] searches for one
//! directly; [`is_cohomologically_symplectic_randomized`] evaluates `α^n`
//! with random integer coefficients instead. Neither consults the column
//! pairing criterion in [`crate::criteria`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

use super::{invariant_basis, is_invariant_monomial, Coefficient, ExteriorElement, Monomial};
use crate::matrix::BottMatrix;
use crate::{Error, Result};

/// Random coefficients are drawn from `1..=RANDOM_COEFFICIENT_MAX`.
pub const RANDOM_COEFFICIENT_MAX: u64 = 1 << 20;
/// Independent evaluations before the randomized oracle answers `false`.
pub const RANDOM_TRIALS: usize = 3;

/// Largest size for which `α^{n}` with coefficients up to `2^20` fits in `i128`:
/// every coefficient is bounded by `n! · (2n-1)!! · 2^{20n}`, below `2^117` at `2n = 10`.
const I128_SAFE_SIZE: usize = 10;

/// Searches for a perfect matching of `0..n` into invariant degree-2 monomials.
/// Returns the matching (lowest free index paired first) or `None`.
pub fn perfect_invariant_matching(a: &BottMatrix) -> Option<Vec<Monomial>> {
    let n = a.size();
    if n % 2 == 1 {
        return None;
    }
    let edges = invariant_basis(a, 2);
    let mut chosen = Vec::with_capacity(n / 2);
    let all = Monomial::top(n).bits();
    search(&edges, all, &mut chosen).then_some(chosen)
}

fn search(edges: &[Monomial], free: u64, chosen: &mut Vec<Monomial>) -> bool {
    if free == 0 {
        return true;
    }
    let low = free & free.wrapping_neg();
    for &e in edges {
        let bits = e.bits();
        if bits & low != 0 && bits & free == bits {
            chosen.push(e);
            if search(edges, free & !bits, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Matching-oracle decision. Odd sizes return false.
pub fn is_cohomologically_symplectic(a: &BottMatrix) -> bool {
    perfect_invariant_matching(a).is_some()
}

/// Evaluates `α^{n/2}` exactly for `α` with random coefficients in
/// `1..=2^20` on every invariant degree-2 monomial, up to
/// [`RANDOM_TRIALS`] times. A nonzero power is a certificate; `false` is
/// wrong only if all trials hit a root of the Pfaffian, which by
/// Schwartz–Zippel has probability below `(n/2 / 2^20)^3` per matrix.
pub fn is_cohomologically_symplectic_randomized<R: Rng + ?Sized>(
    a: &BottMatrix,
    rng: &mut R,
) -> bool {
    let n = a.size();
    if n % 2 == 1 {
        return false;
    }
    let basis = invariant_basis(a, 2);
    (0..RANDOM_TRIALS).any(|_| {
        let draws: Vec<u64> = basis
            .iter()
            .map(|_| rng.gen_range(1..=RANDOM_COEFFICIENT_MAX))
            .collect();
        if n <= I128_SAFE_SIZE {
            random_power_nonzero(&basis, &draws, n / 2, |d| d as i128)
        } else {
            random_power_nonzero(&basis, &draws, n / 2, BigInt::from)
        }
    })
}

fn random_power_nonzero<T: Coefficient>(
    basis: &[Monomial],
    draws: &[u64],
    exponent: usize,
    lift: impl Fn(u64) -> T,
) -> bool {
    let alpha = ExteriorElement::from_terms(basis.iter().zip(draws).map(|(&m, &d)| (m, lift(d))));
    !alpha.pow(exponent).is_zero()
}

/// `α^exponent` for `α = Σ c_m · du_m` over the given degree-2 monomials.
///
/// Every monomial must be an invariant degree-2 monomial of `a`.
pub fn alpha_power<T: Coefficient>(
    a: &BottMatrix,
    coefficients: &[(Monomial, T)],
    exponent: usize,
) -> Result<ExteriorElement<T>> {
    for (m, _) in coefficients {
        if m.degree() != 2 {
            return Err(Error::NotDegreeTwo { degree: m.degree() });
        }
        if !is_invariant_monomial(a, *m) {
            let mut ix = m.indices();
            let (j, k) = (ix.next().unwrap_or(0), ix.next().unwrap_or(0));
            return Err(Error::NonInvariantCoefficient { j, k });
        }
    }
    Ok(ExteriorElement::from_terms(coefficients.iter().cloned()).pow(exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn m(rows: &[&[u8]]) -> BottMatrix {
        BottMatrix::from_rows(rows).unwrap()
    }

    fn mono(ix: &[usize]) -> Monomial {
        Monomial::from_indices(ix.iter().copied())
    }

    fn example_matrices() -> Vec<BottMatrix> {
        let z = [0u8; 4];
        vec![
            m(&[&[0, 1, 1, 0], &z, &z, &z]),
            m(&[&[0, 1, 0, 1], &z, &z, &z]),
            m(&[&[0, 0, 1, 1], &z, &z, &z]),
            m(&[&[0, 0, 1, 1], &[0, 0, 1, 1], &z, &z]),
            m(&[&z, &[0, 0, 1, 1], &z, &z]),
        ]
    }

    #[test]
    fn matching_oracle_on_examples() {
        assert!(is_cohomologically_symplectic(&BottMatrix::zero(4).unwrap()));
        for a in example_matrices() {
            assert!(is_cohomologically_symplectic(&a), "{a:?}");
        }
        let bad = m(&[&[0, 1, 1, 0], &[0, 0, 1, 1], &[0; 4], &[0; 4]]);
        assert!(!is_cohomologically_symplectic(&bad));
        assert!(!is_cohomologically_symplectic(
            &BottMatrix::zero(3).unwrap()
        ));
    }

    #[test]
    fn randomized_oracle_on_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert!(is_cohomologically_symplectic_randomized(
            &BottMatrix::zero(4).unwrap(),
            &mut rng
        ));
        for a in example_matrices() {
            assert!(is_cohomologically_symplectic_randomized(&a, &mut rng));
        }
        let bad = m(&[&[0, 1, 1, 0], &[0, 0, 1, 1], &[0; 4], &[0; 4]]);
        assert!(!is_cohomologically_symplectic_randomized(&bad, &mut rng));
    }

    #[test]
    fn randomized_oracle_beyond_i128_range() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(is_cohomologically_symplectic_randomized(
            &BottMatrix::zero(12).unwrap(),
            &mut rng
        ));
    }

    #[test]
    fn alpha_power_examples() {
        let torus = BottMatrix::zero(4).unwrap();
        let a = alpha_power(&torus, &[(mono(&[0, 1]), 1i64), (mono(&[2, 3]), 1)], 2).unwrap();
        assert_eq!(a, ExteriorElement::term(Monomial::top(4), 2));

        // generic coefficients: 2 (c01 c23 - c02 c13 + c03 c12)
        let (c01, c02, c03, c12, c13, c23) = (2i64, 3, 5, 7, 11, 13);
        let coeffs = [
            (mono(&[0, 1]), c01),
            (mono(&[0, 2]), c02),
            (mono(&[0, 3]), c03),
            (mono(&[1, 2]), c12),
            (mono(&[1, 3]), c13),
            (mono(&[2, 3]), c23),
        ];
        let sq = alpha_power(&torus, &coeffs, 2).unwrap();
        assert_eq!(
            sq.coefficient(Monomial::top(4)),
            2 * (c01 * c23 - c02 * c13 + c03 * c12)
        );

        let ex = m(&[&[0, 1, 1, 0], &[0; 4], &[0; 4], &[0; 4]]);
        let single = alpha_power(&ex, &[(mono(&[0, 3]), 1i64), (mono(&[1, 2]), 0)], 2).unwrap();
        assert!(single.is_zero());
        assert_eq!(
            alpha_power(&ex, &[(mono(&[0, 2]), 1i64)], 2),
            Err(Error::NonInvariantCoefficient { j: 0, k: 2 })
        );
        assert_eq!(
            alpha_power(&ex, &[(mono(&[0]), 1i64)], 2),
            Err(Error::NotDegreeTwo { degree: 1 })
        );
    }
}
