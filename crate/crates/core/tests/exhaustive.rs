//! Exhaustive checks over every matrix of small size against brute-force oracles
//! written here, independent of the library's decision procedures.

use bottsym_core::cohomology::{
    betti, generator_sign_action, invariant_basis, is_cohomologically_symplectic,
    is_invariant_monomial, Monomial,
};
use bottsym_core::criteria::{find_pairing, flux_rank, is_orientable, is_symplectic};
use bottsym_core::family::{iterate_family, Shard};
use bottsym_core::geometry::{
    affine_generator, exp_map, torus_generator, verify_free_action, AffineMap, TorusPoint,
};
use bottsym_core::{BottMatrix, Rational};

fn all(n: usize) -> impl Iterator<Item = BottMatrix> {
    iterate_family(n, Shard::WHOLE).unwrap()
}

/// Tries every way of pairing the first unmatched column with a later equal one.
fn brute_force_pairing(cols: &[Vec<u8>], free: &mut Vec<usize>) -> bool {
    let Some(&first) = free.first() else {
        return true;
    };
    for idx in 1..free.len() {
        let other = free[idx];
        if cols[first] == cols[other] {
            let saved = free.clone();
            free.retain(|&x| x != first && x != other);
            if brute_force_pairing(cols, free) {
                return true;
            }
            *free = saved;
        }
    }
    false
}

fn columns_as_bytes(a: &BottMatrix) -> Vec<Vec<u8>> {
    let rows: Vec<Vec<u8>> = a.rows().collect();
    (0..a.size())
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect()
}

fn row_sums_even(a: &BottMatrix) -> bool {
    a.rows()
        .all(|r| r.iter().map(|&x| x as u32).sum::<u32>() % 2 == 0)
}

#[test]
fn symplectic_agrees_with_brute_force_pairing() {
    for n in 0..=6 {
        for a in all(n) {
            let mut free: Vec<usize> = (0..n).collect();
            let oracle = n % 2 == 0 && brute_force_pairing(&columns_as_bytes(&a), &mut free);
            assert_eq!(is_symplectic(&a), oracle, "{a:?}");
            assert_eq!(is_orientable(&a), row_sums_even(&a), "{a:?}");
        }
    }
}

#[test]
fn matching_oracle_agrees_with_parity_criterion() {
    for n in 0..=6 {
        for a in all(n) {
            assert_eq!(
                is_cohomologically_symplectic(&a),
                is_symplectic(&a),
                "{a:?}"
            );
        }
    }
}

#[test]
fn pairings_are_perfect_matchings_of_equal_columns() {
    for n in [2, 4, 6] {
        for a in all(n).filter(is_symplectic) {
            let p = find_pairing(&a).unwrap();
            let mut seen = vec![false; n];
            for &(j, k) in p.pairs() {
                assert!(j < k);
                assert!(!seen[j] && !seen[k]);
                seen[j] = true;
                seen[k] = true;
                assert_eq!(a.column(j).unwrap(), a.column(k).unwrap());
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}

#[test]
fn symplectic_implies_orientable_and_even_flux_rank() {
    for n in 0..=6 {
        for a in all(n).filter(is_symplectic) {
            assert!(is_orientable(&a), "{a:?}");
            assert_eq!(flux_rank(&a) % 2, 0, "{a:?}");
        }
    }
}

#[test]
fn betti_numbers_by_subset_enumeration() {
    for n in 0..=6 {
        for a in all(n) {
            let mut expected = vec![0u64; n + 1];
            for bits in 0u64..1 << n {
                let m = Monomial::from_bits(bits);
                if is_invariant_monomial(&a, m) {
                    expected[m.degree()] += 1;
                }
            }
            let b = betti(&a);
            assert_eq!(b.as_slice(), expected.as_slice());
            assert_eq!(b.get(1) as usize, flux_rank(&a));
            for k in 0..=n {
                assert_eq!(invariant_basis(&a, k).len() as u64, b.get(k));
            }
        }
    }
}

#[test]
fn poincare_duality_and_euler_characteristic() {
    for n in 1..=7 {
        for a in all(n) {
            let b = betti(&a);
            assert_eq!(b.euler_characteristic(), 0, "{a:?}");
            assert_eq!(b.get(n) == 1, is_orientable(&a));
            if is_orientable(&a) {
                for k in 0..=n {
                    assert_eq!(b.get(k), b.get(n - k), "{a:?}");
                }
            }
        }
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn sample_points(n: usize) -> Vec<Vec<Rational>> {
    (0..3)
        .map(|s| {
            (0..n)
                .map(|j| {
                    Rational::new(
                        ((s * 7 + j * 3) as i64 - 5).into(),
                        (j as i64 + 3 + s as i64).into(),
                    )
                })
                .collect()
        })
        .collect()
}

#[test]
fn generators_square_to_identity_and_unit_translations() {
    for n in 1..=6 {
        for a in all(n) {
            for i in 0..n {
                let s = affine_generator(&a, i).unwrap();
                assert_eq!(s.compose(&s).unwrap(), AffineMap::unit_translation(n, i));
                let t = torus_generator(&a, i).unwrap();
                for u in sample_points(n) {
                    let p = TorusPoint::from_angles(u);
                    assert_eq!(t.apply(&t.apply(&p).unwrap()).unwrap(), p);
                }
                let signs = generator_sign_action(&a, i).unwrap();
                assert_eq!(signs, s.linear_signs());
            }
        }
    }
}

#[test]
fn exponential_map_intertwines_affine_and_torus_generators() {
    for n in 1..=4 {
        for a in all(n) {
            for i in 0..n {
                let s = affine_generator(&a, i).unwrap();
                let t = torus_generator(&a, i).unwrap();
                for u in sample_points(n) {
                    assert_eq!(
                        exp_map(&s.apply(&u).unwrap()),
                        t.apply(&exp_map(&u)).unwrap()
                    );
                }
            }
        }
    }
}

/// Fixed points of the affine generators' products: a coset `g·Z^n` has a
/// fixed point iff some lattice translate of `g` fixes a point, i.e. for
/// every `+1` coordinate the translation is an integer.
#[test]
fn free_action_on_all_small_families() {
    for n in 0..=5 {
        for a in all(n) {
            assert!(verify_free_action(&a), "{a:?}");
        }
    }
    // the criterion itself detects a non-free map
    let fixed = AffineMap::new(&[1, -1], vec![Rational::from_integer(1.into()), half()]).unwrap();
    assert!(!fixed.coset_fixed_point_free());
}
