mod common;

use std::sync::Arc;

use common::{numeric_rank, to_f64};
use num_bigint::BigInt;
use proptest::prelude::*;
use schemeforge::exact::{factor_over_rationals, rat, AlgebraicScalar, ExactMatrix, NumberField, Poly};
use schemeforge::graph::catalog_graph;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=30, 1usize..=30).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-5i64..=5, c), r))
}

/// Low-rank matrices are rare among random ones, so also build `A B` with a thin middle.
fn low_rank_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=20, 1usize..=20, 1usize..=4).prop_flat_map(|(r, c, k)| {
        (prop::collection::vec(prop::collection::vec(-3i64..=3, k), r), prop::collection::vec(prop::collection::vec(-3i64..=3, c), k))
            .prop_map(move |(a, b)| {
                (0..r).map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
            })
    })
}

fn q5() -> Arc<NumberField> {
    NumberField::quadratic(&BigInt::from(5)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_svd(rows in small_matrix()) {
        let m = ExactMatrix::from_i64_rows(&rows).unwrap();
        let (rank, nullity) = m.rank_nullity();
        prop_assert_eq!(rank + nullity, m.cols());
        prop_assert_eq!(rank, numeric_rank(&to_f64(&m)));
    }

    #[test]
    fn low_rank_matches_svd(rows in low_rank_matrix()) {
        let m = ExactMatrix::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(m.rank_nullity().0, numeric_rank(&to_f64(&m)));
    }

    #[test]
    fn factorization_expands_back(roots in prop::collection::vec(-4i64..=4, 0..4), quads in prop::collection::vec((-3i64..=3, 1i64..=5), 0..3), lead in 1i64..=3) {
        let mut p = Poly::constant(rat(lead));
        for r in &roots {
            p = &p * &Poly::from_i64(&[-r, 1]);
        }
        for (b, c) in &quads {
            p = &p * &Poly::from_i64(&[*c, *b, 1]);
        }
        let f = factor_over_rationals(&p).unwrap();
        prop_assert_eq!(f.expand(), p.clone());
        for fac in &f.factors {
            prop_assert!(fac.poly.degree().unwrap_or(0) >= 1);
            prop_assert!(fac.irreducible);
        }
    }

    #[test]
    fn quadratic_field_division(a in (-20i64..=20, -20i64..=20), b in (-20i64..=20, -20i64..=20)) {
        prop_assume!(b != (0, 0));
        let f = q5();
        let x = AlgebraicScalar::from_coeffs(&f, vec![rat(a.0), rat(a.1)]);
        let y = AlgebraicScalar::from_coeffs(&f, vec![rat(b.0), rat(b.1)]);
        let back = (x.clone() * y.clone()) * y.field_inverse().unwrap();
        prop_assert_eq!(back, x.clone());
        // the real embedding is a ring homomorphism
        let lhs = (x.clone() * y.clone()).to_f64();
        prop_assert!((lhs - x.to_f64() * y.to_f64()).abs() < 1e-6 * (1.0 + lhs.abs()));
    }
}

#[test]
fn cayley_hamilton_on_catalog_graphs() {
    for name in ["tetrahedron", "cube", "petersen", "mobius-kantor", "dodecahedron", "icosahedron", "nauru", "coxeter"] {
        let a = catalog_graph(name).unwrap().adjacency_matrix();
        let chi = a.char_poly().unwrap();
        assert_eq!(chi.degree(), Some(a.rows()), "{name}");
        assert!(a.eval_poly(&chi).unwrap().is_zero_matrix(), "{name}");
    }
}

#[test]
fn characteristic_polynomial_factors_match_spectrum() {
    // dodecahedron: (x - 3)(x - 1)^5 x^4 (x + 2)^4 (x^2 - 5)^3
    let a = catalog_graph("dodecahedron").unwrap().adjacency_matrix();
    let f = factor_over_rationals(&a.char_poly().unwrap()).unwrap();
    let mut shape: Vec<(usize, usize)> = f.factors.iter().map(|x| (x.poly.degree().unwrap(), x.multiplicity)).collect();
    shape.sort_unstable();
    assert_eq!(shape, vec![(1, 1), (1, 4), (1, 4), (1, 5), (2, 3)]);
}
