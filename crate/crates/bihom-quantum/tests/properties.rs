use bihom::exactnum::{Rational, RationalFunction as Rf};
use bihom_quantum::pbw::{coproduct, normalize_with, straighten, Strategy as Order};
use bihom_quantum::qplane::{classical_action, star};
use bihom_quantum::*;
use proptest::prelude::*;

fn gen() -> impl Strategy<Value = Gen> {
    prop::sample::select(Gen::ALL.to_vec())
}

fn word(max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(gen(), 0..=max)
}

fn params() -> impl Strategy<Value = TwistParams> {
    let nz = (1i64..6, 1i64..4, any::<bool>())
        .prop_map(|(n, d, neg)| Rational::new((if neg { -n } else { n }).into(), d.into()));
    (prop::array::uniform4(nz.clone()), nz).prop_map(|(l, xi)| TwistParams::rational(l, xi).unwrap())
}

fn small_qp() -> impl Strategy<Value = QPElement> {
    prop::collection::vec(((0u32..3, 0u32..2), -3i64..4), 1..4).prop_map(|terms| {
        let mut p = QPElement::zero(DEFAULT_BOUND);
        for ((m, n), c) in terms {
            p.add_term((m, n), Rf::from_i64(c)).unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriting_is_strategy_independent(w in word(7)) {
        let left = normalize_with(&w, Order::Leftmost);
        prop_assert_eq!(&left, &normalize_with(&w, Order::Rightmost));
        prop_assert_eq!(&left, &straighten(&w));
    }

    #[test]
    fn product_is_associative(a in word(3), b in word(3), c in word(3)) {
        let (x, y, z) = (uq_normalize(&a), uq_normalize(&b), uq_normalize(&c));
        prop_assert_eq!(uq_multiply(&uq_multiply(&x, &y), &z), uq_multiply(&x, &uq_multiply(&y, &z)));
        let joined: Vec<Gen> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(uq_multiply(&x, &y), uq_normalize(&joined));
    }

    #[test]
    fn coproduct_is_an_algebra_map(a in word(3), b in word(2)) {
        let (x, y) = (uq_normalize(&a), uq_normalize(&b));
        prop_assert_eq!(coproduct(&uq_multiply(&x, &y)), coproduct(&x).mul(&coproduct(&y)));
    }

    #[test]
    fn scalings_are_algebra_maps(tp in params(), a in word(3), b in word(3)) {
        let (x, y) = (uq_normalize(&a), uq_normalize(&b));
        for s in [tp.alpha(), tp.beta(), tp.psi(), tp.omega()] {
            prop_assert_eq!(s.apply(&uq_multiply(&x, &y)), uq_multiply(&s.apply(&x), &s.apply(&y)));
        }
    }

    #[test]
    fn classical_action_is_a_module(a in word(2), b in word(2), p in small_qp()) {
        let (x, y) = (uq_normalize(&a), uq_normalize(&b));
        prop_assert_eq!(
            classical_action(&uq_multiply(&x, &y), &p),
            classical_action(&x, &classical_action(&y, &p))
        );
    }

    #[test]
    fn twisted_plane_is_bihom_associative(tp in params(), a in small_qp(), b in small_qp(), c in small_qp()) {
        // α_𝔸(a) ∗ (b ∗ c) = (a ∗ b) ∗ β_𝔸(c)
        let lhs = star(&tp, &qplane::alpha_a(&tp, &a), &star(&tp, &b, &c).unwrap()).unwrap();
        let rhs = star(&tp, &star(&tp, &a, &b).unwrap(), &qplane::beta_a(&tp, &c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn k_formula_on_polynomials(tp in params(), p in small_qp()) {
        for g in [Gen::K, Gen::Kinv] {
            prop_assert_eq!(
                qplane_action(g, &p, &tp),
                qplane::twisted_action(&tp, &PBWElement::generator(g), &p)
            );
        }
    }
}
