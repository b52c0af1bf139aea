use proptest::prelude::*;

use bihom::algebra::{check_bihom_algebra, untwist, yau_twist};
use bihom::bialgebra::{
    check_antipode_properties, check_bihom_bialgebra, find_primitives, hopf_to_monoidal, primitive_bracket,
    primitive_witness, solve_antipode_monoidal, yau_twist_bialgebra, BialgebraMaps,
};
use bihom::coalgebra::{
    check_bihom_coalgebra, coassociativity_matrix_witness, coassociativity_witness, dual_algebra, dual_coalgebra,
};
use bihom::exactnum::parse_scalar;
use bihom::fixtures::{
    cyclic_power, group_algebra, random, restricted_borel, restricted_borel_scaling, twisted_cyclic_self_action,
};
use bihom::lie::{check_bihom_lie, commutator_lie};
use bihom::linalg::{kernel, rank, vector};
use bihom::smash::{smash_twisting_map, SmashData};
use bihom::twisting::{apply_pseudotwistor, canonical_pseudotwistor, check_pseudotwistor, check_twisting_map};
use bihom::{Field, Matrix, Scalar};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(2).unwrap()),
        Just(Field::RationalFunction),
    ]
}

/// `(c0 + c1 t + c2 t²) / (d0 + d1 t)` with `t = q` in `Q(q)` and `t` a
/// small constant elsewhere; `None` when the denominator vanishes.
fn build(f: Field, num: &[i64], den: &[i64]) -> Option<Scalar> {
    let t = match f {
        Field::RationalFunction => Scalar::q(),
        _ => Scalar::from_i64(f, 3),
    };
    let eval = |cs: &[i64]| {
        cs.iter()
            .rev()
            .fold(Scalar::zero(f), |acc, c| &(&acc * &t) + &Scalar::from_i64(f, *c))
    };
    let d = eval(den);
    (!d.is_zero()).then(|| &eval(num) / &d)
}

fn scalars(n: usize) -> impl Strategy<Value = (Field, Vec<Scalar>)> {
    field().prop_flat_map(move |f| {
        proptest::collection::vec(
            (
                proptest::collection::vec(-6i64..=6, 3),
                proptest::collection::vec(-4i64..=4, 2),
            ),
            n,
        )
        .prop_filter_map("zero denominator", move |parts| {
            parts
                .iter()
                .map(|(a, b)| build(f, a, b))
                .collect::<Option<Vec<_>>>()
                .map(|v| (f, v))
        })
    })
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
            Matrix::from_fn(Field::Rational, r, c, |i, j| {
                Scalar::from_i64(Field::Rational, xs[i * c + j])
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms((f, xs) in scalars(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a - a), &Scalar::zero(f));
        if !a.is_zero() {
            prop_assert!((a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn scalars_round_trip_through_text((f, xs) in scalars(1)) {
        let x = &xs[0];
        prop_assert_eq!(&parse_scalar(f, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn rank_nullity_and_kernel(m in small_matrix()) {
        let ker = kernel(&m);
        prop_assert_eq!(rank(&m) + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(vector::is_zero(&m.apply(v)));
        }
        if m.is_square() && m.is_invertible() {
            prop_assert!((&m * &m.inverse().unwrap()).is_identity());
        }
    }

    #[test]
    fn yau_twists_are_sound_and_invert(seed in any::<u64>(), invertible in any::<bool>()) {
        let input = random::associative_with_maps(&mut random::rng(seed), Field::Rational, 4, invertible);
        let t = yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap();
        prop_assert!(check_bihom_algebra(&t).unwrap().passed());
        if input.alpha.is_invertible() && input.beta.is_invertible() {
            let back = untwist(&t).unwrap();
            prop_assert_eq!(back.mu, input.algebra.mu);
        }
    }

    #[test]
    fn commutator_brackets_are_bihom_lie(seed in any::<u64>()) {
        let input = random::associative_with_maps(&mut random::rng(seed), Field::Rational, 4, true);
        let t = yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap();
        prop_assert!(check_bihom_lie(&commutator_lie(&t).unwrap()).unwrap().passed());
    }

    #[test]
    fn double_dual_is_identity(seed in any::<u64>()) {
        let input = random::associative_with_maps(&mut random::rng(seed), Field::Rational, 4, false);
        let a = yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap();
        let c = dual_coalgebra(&a).unwrap();
        prop_assert!(check_bihom_coalgebra(&c).unwrap().passed());
        let back = dual_algebra(&c).unwrap();
        prop_assert_eq!((back.mu, back.alpha, back.beta, back.unit), (a.mu, a.alpha, a.beta, a.unit));
    }

    #[test]
    fn coassociativity_forms_agree(seed in any::<u64>(), pos in any::<(usize, usize, usize)>(), bump in 1i64..4) {
        let input = random::associative_with_maps(&mut random::rng(seed), Field::Rational, 4, false);
        let a = yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap();
        let c = dual_coalgebra(&a).unwrap();
        prop_assert!(coassociativity_witness(&c).is_none());
        prop_assert!(coassociativity_matrix_witness(&c).is_none());
        let d = c.dim();
        let (i, j, k) = (pos.0 % d, pos.1 % d, pos.2 % d);
        let mut delta = c.delta.clone();
        delta.set(i, j, k, delta.get(i, j, k) + &Scalar::from_i64(Field::Rational, bump));
        let broken = c.rebuild(delta, c.psi.clone(), c.omega.clone(), None);
        prop_assert_eq!(coassociativity_witness(&broken).is_none(), coassociativity_matrix_witness(&broken).is_none());
    }

    #[test]
    fn canonical_pseudotwistor_is_yau_twist(seed in any::<u64>()) {
        let input = random::associative_with_maps(&mut random::rng(seed), Field::Rational, 3, false);
        let p = canonical_pseudotwistor(&input.algebra, &input.alpha, &input.beta).unwrap();
        prop_assert!(check_pseudotwistor(&input.algebra, &p).unwrap().passed());
        prop_assert_eq!(
            apply_pseudotwistor(&input.algebra, &p).unwrap(),
            yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_smash_index_triple_twists(m in -3i64..=3, n in -3i64..=3, p in -3i64..=3) {
        let (h, a, act) = twisted_cyclic_self_action(Field::Rational, 4).unwrap();
        let ha = h.algebra();
        let r = smash_twisting_map(&SmashData::new(h, a.clone(), act).with_indices(m, n, p)).unwrap();
        prop_assert!(check_twisting_map(&a, &ha, &r).unwrap().passed());
    }

    #[test]
    fn monoidal_group_algebras_have_classical_antipode(n in 1usize..=6, k in 0i64..6) {
        let k = k % n as i64;
        prop_assume!(num_integer::gcd(k, n as i64) == 1);
        let g = group_algebra(Field::Rational, n);
        let alpha = cyclic_power(Field::Rational, n, k);
        let m = hopf_to_monoidal(&g.bialgebra, &g.antipode, &alpha, &Matrix::identity(Field::Rational, n)).unwrap();
        prop_assert!(check_bihom_bialgebra(&m.bialgebra).unwrap().passed());
        prop_assert_eq!(solve_antipode_monoidal(&m.bialgebra).unwrap(), Some(g.antipode.clone()));
        prop_assert!(check_antipode_properties(&m.bialgebra, &m.antipode).unwrap().passed());
    }

    #[test]
    fn twisted_borel_primitives(c in 1i64..3, swap in any::<bool>()) {
        let hopf = restricted_borel(3).unwrap();
        let f = hopf.bialgebra.field();
        let mut by = BialgebraMaps::identity(f, hopf.bialgebra.dim());
        let scale = restricted_borel_scaling(3, c).unwrap();
        if swap { by.beta = scale } else { by.alpha = scale }
        let h = yau_twist_bialgebra(&hopf.bialgebra, &by).unwrap();
        let prims = find_primitives(&h).unwrap();
        prop_assert_eq!(prims.len(), 2);
        for x in &prims {
            prop_assert!(primitive_witness(&h, x).unwrap().is_none());
            prop_assert_eq!(h.omega.apply(x), h.psi.apply(x));
            for y in &prims {
                let b = primitive_bracket(&h, x, y).unwrap();
                prop_assert!(primitive_witness(&h, &b).unwrap().is_none());
            }
        }
    }
}
