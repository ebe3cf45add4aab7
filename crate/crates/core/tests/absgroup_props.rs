use proptest::prelude::*;
use revsym::absgroup::{enumerate_reversors, GroupModel, GroupWord, ModelKind};
use revsym::Order;

fn kinds() -> Vec<ModelKind> {
    let mut v: Vec<ModelKind> = ModelKind::all(3).into();
    v.extend([
        ModelKind::CinfRtimesC2p(5),
        ModelKind::CinfRtimesC2p(7),
        ModelKind::CpxCinfRtimesC2(5),
        ModelKind::CpxCinfRtimesC2(7),
    ]);
    v.extend((2..=5).map(ModelKind::TwistedDinf));
    v
}

fn model() -> impl Strategy<Value = GroupModel> {
    prop::sample::select(kinds()).prop_map(|k| GroupModel::new(k).unwrap())
}

fn word(m: GroupModel, window: i64) -> impl Strategy<Value = GroupWord> {
    (0..m.torsion, -window..=window, -window..=window, 0..m.reversor_order)
        .prop_map(move |(a, b, n, j)| m.normalize(GroupWord::new(a, b, n, j)))
}

fn model_and_words(k: usize) -> impl Strategy<Value = (GroupModel, Vec<GroupWord>)> {
    model().prop_flat_map(move |m| (Just(m), prop::collection::vec(word(m, 10), k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn multiplication_is_associative((m, w) in model_and_words(3)) {
        let (u, v, x) = (w[0], w[1], w[2]);
        prop_assert_eq!(m.multiply(m.multiply(u, v), x), m.multiply(u, m.multiply(v, x)));
    }

    #[test]
    fn grading_is_a_homomorphism((m, w) in model_and_words(2)) {
        let (u, v) = (w[0], w[1]);
        prop_assert_eq!(m.grade(m.multiply(u, v)), m.grade(u) * m.grade(v));
        prop_assert_eq!(m.grade(u) == 1, u.j % 2 == 0);
    }

    #[test]
    fn orders_agree_with_iteration((m, w) in model_and_words(1)) {
        let u = w[0];
        let iter = m.word_order_iterative(u, 200);
        match m.word_order(u) {
            Order::Finite(k) => prop_assert_eq!(iter, Some(k)),
            Order::Infinite => prop_assert_eq!(iter, None),
        }
    }

    #[test]
    fn squaring_identity_for_involutory_reversors((m, w) in model_and_words(1), k in 1i64..=5) {
        let involutions: Vec<GroupWord> = enumerate_reversors(&m, 2)
            .into_iter()
            .filter(|(_, o)| *o == Order::Finite(2))
            .map(|(u, _)| u)
            .collect();
        prop_assume!(!involutions.is_empty());
        let mut h = w[0];
        h.j = 0;
        for r in involutions.into_iter().take(4) {
            let sigma_h = m.conjugate(r, h);
            prop_assert_eq!(m.pow(m.multiply(r, h), 2 * k), m.pow(m.multiply(sigma_h, h), k));
        }
    }
}

#[test]
fn inverses_on_window_five() {
    for kind in kinds() {
        let m = GroupModel::new(kind).unwrap();
        let b_range = if m.two_free { -5..=5 } else { 0..=0 };
        for a in 0..m.torsion {
            for b in b_range.clone() {
                for n in -5..=5 {
                    for j in 0..m.reversor_order {
                        let u = GroupWord::new(a, b, n, j);
                        assert_eq!(m.multiply(u, m.invert(u)), GroupWord::IDENTITY, "{kind}: {u}");
                        assert_eq!(m.multiply(m.invert(u), u), GroupWord::IDENTITY, "{kind}: {u}");
                    }
                }
            }
        }
    }
}

#[test]
fn f_is_reversed_by_r_in_every_model() {
    for kind in kinds() {
        let m = GroupModel::new(kind).unwrap();
        let r = GroupWord::r(1);
        let f = m.f_word;
        assert_eq!(m.multiply(r, m.multiply(f, m.invert(r))), m.invert(f), "{kind}");
        assert_eq!(m.word_order(f), Order::Infinite, "{kind}");
    }
}

#[test]
fn no_odd_order_reversor_in_any_window() {
    for kind in kinds() {
        let m = GroupModel::new(kind).unwrap();
        for (u, o) in enumerate_reversors(&m, 6) {
            assert!(!o.is_odd(), "{kind}: {u} has order {o}");
        }
    }
}

#[test]
fn twisted_generator_change_removes_even_twist() {
    // σ(t) = t g^k; with t̃ = t g^⌊k/2⌋, σ(t̃) = t̃ for even k and t̃ g for odd k
    let r = GroupWord::r(1);
    for k in 2..=5 {
        let m = GroupModel::new(ModelKind::TwistedDinf(k)).unwrap();
        let t = GroupWord::t(1);
        let g = GroupWord::g(1);
        assert_eq!(m.conjugate(r, t), m.multiply(t, m.pow(g, k)));
        let t_new = m.multiply(t, m.pow(g, k / 2));
        let expected = if k % 2 == 0 { t_new } else { m.multiply(t_new, g) };
        assert_eq!(m.conjugate(r, t_new), expected, "k = {k}");
    }
}

#[test]
fn non_prime_parameters_are_rejected() {
    assert!(GroupModel::new(ModelKind::CinfRtimesC2p(9)).is_err());
    assert!(GroupModel::new(ModelKind::CpxCinfRtimesC2(2)).is_err());
}

#[test]
fn associativity_on_ten_thousand_triples_per_model() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10_000);
    for kind in kinds() {
        let m = GroupModel::new(kind).unwrap();
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            m.normalize(GroupWord::new(
                rng.gen_range(0..m.torsion),
                rng.gen_range(-10..=10),
                rng.gen_range(-10..=10),
                rng.gen_range(0..m.reversor_order),
            ))
        };
        for _ in 0..10_000 {
            let (u, v, w) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            assert_eq!(m.multiply(m.multiply(u, v), w), m.multiply(u, m.multiply(v, w)), "{kind}");
        }
    }
}
