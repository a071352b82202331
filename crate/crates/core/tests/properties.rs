use proptest::prelude::*;

use qserre_core::exactnum::{qbracket, Polynomial, Scalar};
use qserre_core::linalg::{characteristic_polynomial, rational_roots, Matrix, Subspace};
use qserre_core::words::{is_reducible, Word};

fn q_strategy() -> impl Strategy<Value = Scalar> {
    (2i64..7, 1i64..5).prop_filter_map("q must not be ±1", |(n, d)| {
        let q = Scalar::ratio(n, d).ok()?;
        (!q.is_one()).then_some(q)
    })
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-9i64..10, 1i64..5), 0..5)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(|(n, d)| Scalar::ratio(n, d).unwrap()).collect()))
}

fn vectors(n: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec((-2i64..3).prop_map(Scalar::from_int), n), 0..4)
}

proptest! {
    #[test]
    fn qbracket_three_term_recurrence(q in q_strategy(), n in 1u32..12) {
        let sum = &q + &(Scalar::one() / &q);
        let lhs = qbracket(n + 1, &q).unwrap();
        let rhs = &(&sum * &qbracket(n, &q).unwrap()) - &qbracket(n - 1, &q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qbracket_invariant_under_inversion(q in q_strategy(), n in 0u32..12) {
        let inv = Scalar::one() / &q;
        prop_assert_eq!(qbracket(n, &q).unwrap(), qbracket(n, &inv).unwrap());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly_strategy(), r in poly_strategy(), z in (-5i64..6, 1i64..4)) {
        let z = Scalar::ratio(z.0, z.1).unwrap();
        prop_assert_eq!(p.mul(&r).eval(&z), &p.eval(&z) * &r.eval(&z));
        prop_assert_eq!(p.add(&r).eval(&z), &p.eval(&z) + &r.eval(&z));
    }

    #[test]
    fn sum_and_intersection_dimensions(u in vectors(4), w in vectors(4)) {
        let (u, w) = (Subspace::span(4, &u), Subspace::span(4, &w));
        let sum = u.sum(&w).unwrap();
        let cap = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains(&u) && sum.contains(&w));
        prop_assert!(u.contains(&cap) && w.contains(&cap));
    }

    #[test]
    fn reducibility_is_mirror_symmetric(bits in any::<u16>(), n in 0usize..15) {
        let w = Word::from_bits(u64::from(bits) & ((1 << n) - 1), n);
        prop_assert_eq!(is_reducible(&w), is_reducible(&w.mirror()));
    }

    #[test]
    fn diagonal_spectrum_is_recovered(xs in prop::collection::vec(-4i64..5, 1..6)) {
        let diag: Vec<Scalar> = xs.iter().map(|&x| Scalar::from_int(x)).collect();
        let m = Matrix::diag(&diag);
        let roots = rational_roots(&characteristic_polynomial(&m));
        let total: usize = roots.iter().map(|(_, k)| k).sum();
        prop_assert_eq!(total, xs.len());
        for (r, k) in roots {
            prop_assert_eq!(k, diag.iter().filter(|x| **x == r).count());
        }
    }
}
