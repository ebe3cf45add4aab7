use proptest::prelude::*;
use revsym::exactmath::{finite_order_test, reciprocity_class};
use revsym::{BigInt, IntMatrix, Order, Reciprocity};

fn matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-9i64..=9, n * n).prop_map(move |e| IntMatrix::from_i64s(n, &e))
}

/// Products of elementary shears and sign flips are unimodular by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 1..8).prop_map(move |ops| {
        let mut acc = IntMatrix::identity(n);
        for (i, j, c, flip) in ops {
            let mut e = IntMatrix::identity(n);
            if i != j {
                e.set(i, j, BigInt::from(c));
            } else if flip {
                e.set(i, i, BigInt::from(-1));
            }
            acc = &acc * &e;
        }
        acc
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in matrix(3), b in matrix(3), c in matrix(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn unimodular_inverse_is_two_sided(a in unimodular(3)) {
        let inv = a.inverse_unimodular().unwrap();
        prop_assert!((&a * &inv).is_identity());
        prop_assert!((&inv * &a).is_identity());
    }

    #[test]
    fn determinant_is_multiplicative(a in unimodular(4), b in unimodular(4)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn char_poly_is_conjugation_invariant(a in matrix(3), s in unimodular(3)) {
        let conj = &(&s * &a) * &s.inverse_unimodular().unwrap();
        prop_assert_eq!(conj.char_poly(), a.char_poly());
    }

    #[test]
    fn special_2x2_matches_its_inverse_spectrum(a in unimodular(2)) {
        prop_assume!(a.det() == BigInt::from(1));
        let p = a.char_poly();
        prop_assert_eq!(&p, &a.inverse_unimodular().unwrap().char_poly());
        prop_assert_eq!(reciprocity_class(&p), Reciprocity::Direct);
    }

    #[test]
    fn adjugate_inverts_up_to_determinant(a in matrix(3)) {
        let prod = &a * &a.adjugate();
        prop_assert_eq!(prod, IntMatrix::scalar(3, a.det()));
    }
}

fn naive_order(a: &IntMatrix, cap: u64) -> Option<u64> {
    let mut p = a.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Some(k);
        }
        p = &p * a;
    }
    None
}

#[test]
fn finite_order_agrees_with_iteration_on_small_2x2() {
    let mut checked = 0;
    for e in 0..7i64.pow(4) {
        let d: Vec<i64> = (0..4).map(|i| (e / 7i64.pow(i)) % 7 - 3).collect();
        let a = IntMatrix::from_i64s(2, &d);
        if !a.is_unimodular() {
            continue;
        }
        let expected = naive_order(&a, 60).map_or(Order::Infinite, Order::Finite);
        assert_eq!(finite_order_test(&a, false).unwrap(), expected, "{a}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn determinant_and_char_poly_of_known_matrices() {
    let fib = IntMatrix::from_i64s(2, &[0, 1, 1, 1]);
    assert_eq!(fib.det(), BigInt::from(-1));
    assert_eq!(fib.char_poly().to_string(), "x^2 - x - 1");
    let cat = IntMatrix::from_i64s(2, &[2, 1, 1, 1]);
    assert_eq!(finite_order_test(&cat, false).unwrap(), Order::Infinite);
    let rot = IntMatrix::from_i64s(2, &[0, -1, 1, 1]);
    assert_eq!(finite_order_test(&rot, false).unwrap(), Order::Finite(6));
    assert_eq!(finite_order_test(&rot, true).unwrap(), Order::Finite(3));
}
