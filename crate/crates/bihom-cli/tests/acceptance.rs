//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::time::Instant;

use rand::Rng;

use bihom::algebra::{
    axiom as alg_axiom, check_bihom_algebra, example_family, find_unit, untwist, yau_twist, BiHomAlgebra, Family,
};
use bihom::bialgebra::{
    check_antipode_properties, check_bihom_bialgebra, check_module_bihom_algebra, find_primitives, hopf_to_monoidal,
    is_monoidal, primitive_bracket, primitive_witness, solve_antipode_monoidal, yau_twist_bialgebra, BialgebraMaps,
};
use bihom::coalgebra::{convolution_algebra, dual_algebra, dual_coalgebra, grouplike, underline_hom, BiHomCoalgebra};
use bihom::counterexample::{hom_obstruction, monomial, no_antipode_chain};
use bihom::exactnum::{parse_scalar, Rational};
use bihom::fixtures::{
    cyclic_power, cyclic_self_action, dual_numbers, group_algebra, random, restricted_borel, restricted_borel_scaling,
    signed_inversion, sweedler, twisted_cyclic_self_action,
};
use bihom::lie::{
    adjoint_rep, check_bihom_lie, check_representation, commutator_lie, semidirect_product, sl2, sl2_grading,
    yau_twist_lie, BiHomLieAlgebra,
};
use bihom::linalg::vector;
use bihom::smash::{
    dual_comodule_maps, dual_module_algebra, smash_comodule_structure, smash_product, smash_twisting_map, SmashData,
};
use bihom::twisting::{apply_pseudotwistor, canonical_pseudotwistor, check_pseudotwistor, check_twisting_map};
use bihom::{CheckReport, Field, Matrix, Scalar};
use bihom_quantum::verify::{check_confluence, right_factors, verify_action_grid, verify_smash_grid};
use bihom_quantum::{TwistParams, DEFAULT_BOUND};

const Q: Field = Field::Rational;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn passes(what: &str, r: bihom::Result<CheckReport>) -> Outcome {
    let r = r.map_err(|e| format!("{what}: {e}"))?;
    ensure!(r.passed(), "{what}:\n{}", r.only_failures().render(3));
    Ok(())
}

fn s(n: i64) -> Scalar {
    Scalar::from_i64(Q, n)
}

fn random_rational(rng: &mut impl Rng) -> Scalar {
    let d = rng.gen_range(1..=9);
    Scalar::ratio(Q, rng.gen_range(-12..=12), d).expect("nonzero denominator")
}

/// Random associative algebras of dimension 2 to 4 with commuting endomorphisms.
fn random_inputs(seed: u64, count: usize, invertible: bool) -> Vec<random::TwistInput> {
    let mut rng = random::rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let input = random::associative_with_maps(&mut rng, Q, 4, invertible);
        if input.algebra.dim() >= 2 {
            out.push(input);
        }
    }
    out
}

fn same_structure(a: &BiHomAlgebra, b: &BiHomAlgebra) -> bool {
    a.mu == b.mu && a.alpha == b.alpha && a.beta == b.beta && a.unit == b.unit
}

fn same_lie(a: &BiHomLieAlgebra, b: &BiHomLieAlgebra) -> bool {
    a.bracket == b.bracket && a.alpha == b.alpha && a.beta == b.beta
}

fn example_families() -> Outcome {
    let mut rng = random::rng(1);
    let e1 = vec![s(1), s(0)];
    for (which, count) in [(Family::First, 20), (Family::Second, 20)] {
        let mut done = 0;
        while done < count {
            let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
            let admissible = match which {
                Family::First => !b.is_one(),
                Family::Second => !a.is_zero(),
            };
            if !admissible {
                continue;
            }
            let alg = example_family(which, &a, &b).map_err(err)?;
            let r = check_bihom_algebra(&alg).map_err(err)?;
            ensure!(r.passed(), "{which:?} ({a}, {b}):\n{}", r.only_failures().render(3));
            for ax in [
                alg_axiom::UNIT_LEFT,
                alg_axiom::UNIT_RIGHT,
                alg_axiom::UNIT_ALPHA,
                alg_axiom::UNIT_BETA,
            ] {
                ensure!(
                    r.entry(ax).is_some(),
                    "{which:?} ({a}, {b}): unit axiom {ax} was not checked"
                );
            }
            ensure!(
                alg.unit.as_deref() == Some(&e1[..]),
                "{which:?} ({a}, {b}): unit is not e1"
            );
            ensure!(
                find_unit(&alg) == Some(e1.clone()),
                "{which:?} ({a}, {b}): solved unit is not e1"
            );
            done += 1;
        }
    }
    for a in [s(0), s(3), random_rational(&mut rng)] {
        ensure!(
            example_family(Family::First, &a, &s(1)).is_err(),
            "family 1 accepted b = 1 at a = {a}"
        );
    }
    Ok(())
}

fn yau_twist_soundness() -> Outcome {
    let mut inverted = 0;
    for (i, input) in random_inputs(2, 50, false).iter().enumerate() {
        let t = yau_twist(&input.algebra, &input.alpha, &input.beta).map_err(err)?;
        passes(&format!("sample {i}"), check_bihom_algebra(&t))?;
        if input.alpha.is_invertible() && input.beta.is_invertible() {
            let back = untwist(&t).map_err(err)?;
            ensure!(
                same_structure(&back, &input.algebra),
                "sample {i}: untwist does not recover the original"
            );
            inverted += 1;
        }
    }
    ensure!(inverted > 0, "no sample had invertible maps");
    Ok(())
}

fn commutator_bihom_lie() -> Outcome {
    for (i, input) in random_inputs(3, 30, true).iter().enumerate() {
        let twisted = yau_twist(&input.algebra, &input.alpha, &input.beta).map_err(err)?;
        let l = commutator_lie(&twisted).map_err(err)?;
        passes(&format!("sample {i}"), check_bihom_lie(&l))?;
        let classical = commutator_lie(&input.algebra).map_err(err)?;
        let expected = yau_twist_lie(&classical, &input.alpha, &input.beta).map_err(err)?;
        ensure!(
            same_lie(&l, &expected),
            "sample {i}: L(A_(alpha,beta)) differs from L(A)_(alpha,beta)"
        );
    }
    Ok(())
}

fn lie_fixtures() -> Result<Vec<(String, BiHomLieAlgebra)>, String> {
    let base = sl2(Q);
    let graded = yau_twist_lie(
        &base,
        &sl2_grading(Q, &s(2)).map_err(err)?,
        &sl2_grading(Q, &s(-3)).map_err(err)?,
    )
    .map_err(err)?;
    let mut out = vec![("sl2".to_string(), base), ("graded sl2".to_string(), graded)];
    for (name, which, a, b) in [("family 1", Family::First, 3, 2), ("family 2", Family::Second, 2, 5)] {
        let alg = example_family(which, &s(a), &s(b)).map_err(err)?;
        out.push((format!("L({name})"), commutator_lie(&alg).map_err(err)?));
    }
    for (i, input) in random_inputs(4, 5, true).iter().enumerate() {
        let t = yau_twist(&input.algebra, &input.alpha, &input.beta).map_err(err)?;
        out.push((format!("L(random {i})"), commutator_lie(&t).map_err(err)?));
    }
    Ok(out)
}

fn adjoint_and_semidirect() -> Outcome {
    for (name, l) in lie_fixtures()? {
        let rep = adjoint_rep(&l).map_err(err)?;
        passes(&format!("{name}: adjoint"), check_representation(&l, &rep))?;
        let sd = semidirect_product(&l, &rep).map_err(err)?;
        ensure!(
            sd.dim() == 2 * l.dim(),
            "{name}: semidirect product has the wrong dimension"
        );
        passes(&format!("{name}: semidirect"), check_bihom_lie(&sd))?;
    }
    Ok(())
}

fn algebra_fixtures() -> Result<Vec<(String, BiHomAlgebra)>, String> {
    let mut out = Vec::new();
    for (which, a, b) in [
        (Family::First, 3, 2),
        (Family::First, -1, 5),
        (Family::Second, 2, 5),
        (Family::Second, -3, 1),
    ] {
        out.push((
            format!("{which:?}({a},{b})"),
            example_family(which, &s(a), &s(b)).map_err(err)?,
        ));
    }
    out.push(("kC2".into(), group_algebra(Q, 2).bialgebra.algebra()));
    out.push(("sweedler".into(), sweedler(Q).bialgebra.algebra()));
    let (h, a, _) = twisted_cyclic_self_action(Q, 4).map_err(err)?;
    out.push(("twisted kC4".into(), h.algebra()));
    out.push(("twisted kC4 (acted on)".into(), a));
    for (i, input) in random_inputs(5, 6, false).iter().enumerate() {
        out.push((
            format!("random {i}"),
            yau_twist(&input.algebra, &input.alpha, &input.beta).map_err(err)?,
        ));
    }
    Ok(out)
}

fn duality_and_convolution() -> Outcome {
    let g2 = grouplike(Q, vec!["1".into(), "g".into()]);
    let coalgebras: Vec<(&str, BiHomCoalgebra)> = vec![("kC2", g2), ("sweedler", sweedler(Q).bialgebra.coalgebra())];
    for (name, a) in algebra_fixtures()? {
        let back = dual_algebra(&dual_coalgebra(&a).map_err(err)?).map_err(err)?;
        ensure!(same_structure(&back, &a), "{name}: double dual differs");
        for (cname, c) in &coalgebras {
            let conv = convolution_algebra(c, &a).map_err(err)?;
            passes(&format!("Hom({cname}, {name})"), check_bihom_algebra(&conv))?;
            let under = underline_hom(c, &a).map_err(err)?;
            let alg = &under.algebra;
            ensure!(
                alg.alpha.is_identity() && alg.beta.is_identity(),
                "{name}: underline Hom has nontrivial maps"
            );
            passes(&format!("underline Hom({cname}, {name})"), check_bihom_algebra(alg))?;
            if let (Some(u), Some(_)) = (&a.unit, &c.counit) {
                let eta_eps = vector::tensor(u, c.counit.as_ref().expect("checked"));
                let fixed = a.alpha.apply(u) == *u && a.beta.apply(u) == *u;
                if fixed {
                    let sub_unit = alg.unit.as_ref().ok_or(format!("{name}: underline Hom has no unit"))?;
                    ensure!(
                        under.embedding.apply(sub_unit) == eta_eps,
                        "{name}: underline Hom unit is not eta∘eps"
                    );
                }
            }
        }
    }
    Ok(())
}

fn antipodes() -> Outcome {
    let c4 = group_algebra(Q, 4);
    let sw = sweedler(Q);
    let minus = bihom::fixtures::sweedler_scaling(Q, &s(-1));
    let two = bihom::fixtures::sweedler_scaling(Q, &s(2));
    let cases = [
        ("kC4", &c4, cyclic_power(Q, 4, 3), Matrix::identity(Q, 4)),
        ("sweedler", &sw, minus, Matrix::identity(Q, 4)),
        ("sweedler (2, 1/2)", &sw, two.clone(), two.inverse().map_err(err)?),
    ];
    for (name, hopf, alpha, beta) in cases {
        let m = hopf_to_monoidal(&hopf.bialgebra, &hopf.antipode, &alpha, &beta).map_err(err)?;
        passes(&format!("{name}: bialgebra"), check_bihom_bialgebra(&m.bialgebra))?;
        ensure!(is_monoidal(&m.bialgebra).map_err(err)?, "{name}: not monoidal");
        let solved = solve_antipode_monoidal(&m.bialgebra).map_err(err)?;
        ensure!(
            solved.as_ref() == Some(&hopf.antipode),
            "{name}: solved antipode differs from the classical one"
        );
        passes(
            &format!("{name}: antipode"),
            check_antipode_properties(&m.bialgebra, &m.antipode),
        )?;
    }
    Ok(())
}

fn counterexamples() -> Outcome {
    let one = Scalar::one(Q);
    let h = hom_obstruction(Q, &one).map_err(err)?;
    ensure!(h.steps.passed(), "c = 1 chain:\n{}", h.steps.only_failures().render(3));
    ensure!(
        h.lhs == monomial(Q, 15) && h.rhs == monomial(Q, 13),
        "c = 1: sides are not X^15 and X^13"
    );
    ensure!(h.lhs != h.rhs, "c = 1: sides agree");

    let f = Field::RationalFunction;
    let c = Scalar::q();
    let h = hom_obstruction(f, &c).map_err(err)?;
    ensure!(
        h.steps.passed(),
        "symbolic chain:\n{}",
        h.steps.only_failures().render(3)
    );
    let c2 = c.pow(2).map_err(err)?;
    ensure!(
        h.lhs == vector::scale(&c2, &monomial(f, 15)),
        "symbolic lhs is not c^2 X^15"
    );
    ensure!(
        h.rhs == vector::scale(&c, &monomial(f, 13)),
        "symbolic rhs is not c X^13"
    );

    let r = no_antipode_chain(Q).map_err(err)?;
    ensure!(r.passed(), "no-antipode chain:\n{}", r.only_failures().render(3));
    ensure!(r.entries.len() == 9, "no-antipode chain has {} steps", r.entries.len());
    Ok(())
}

fn pseudotwistors() -> Outcome {
    let f = Field::RationalFunction;
    let int = |n| Scalar::from_i64(f, n);
    let one = int(1);
    let mu = bihom::Tensor3::from_fn(f, (2, 2, 2), |i, _, k| if i == k { int(1) } else { int(0) });
    let d = BiHomAlgebra::new(
        vec!["e1".into(), "e2".into()],
        mu,
        Matrix::identity(f, 2),
        Matrix::from_ints(f, &[&[1, 1], &[0, 0]]),
        None,
    )
    .map_err(err)?;
    let affine = |c: &Scalar| Matrix::from_rows(f, vec![vec![one.clone(), c.clone()], vec![int(0), &one - c]]);
    let a = Scalar::q();
    let b = parse_scalar(f, "1/(q+1)").map_err(err)?;
    let (al, be) = (affine(&a).map_err(err)?, affine(&b).map_err(err)?);
    let p = canonical_pseudotwistor(&d, &al, &be).map_err(err)?;
    passes("2-dim example", check_pseudotwistor(&d, &p))?;
    let t = apply_pseudotwistor(&d, &p).map_err(err)?;
    let e1 = vec![one.clone(), int(0)];
    let mixed = vec![a.clone(), &one - &a];
    let table = [((0, 0), &e1), ((0, 1), &e1), ((1, 0), &mixed), ((1, 1), &mixed)];
    for ((i, j), want) in table {
        ensure!(
            t.mu.fiber(i, j) == &want[..],
            "mu_T(e{}, e{}) is {:?}",
            i + 1,
            j + 1,
            t.mu.fiber(i, j)
        );
    }
    ensure!(
        t.alpha.column(0) == e1 && t.alpha.column(1) == mixed,
        "alpha_T is wrong"
    );
    ensure!(t.beta.column(0) == e1 && t.beta.column(1) == e1, "beta_T is wrong");
    ensure!(
        same_structure(&t, &yau_twist(&d, &al, &be).map_err(err)?),
        "2-dim example differs from the Yau twist"
    );

    for (i, input) in random_inputs(6, 30, false).iter().enumerate() {
        let p = canonical_pseudotwistor(&input.algebra, &input.alpha, &input.beta).map_err(err)?;
        let r = check_pseudotwistor(&input.algebra, &p).map_err(err)?;
        ensure!(r.passed(), "sample {i}:\n{}", r.only_failures().render(3));
        let got = apply_pseudotwistor(&input.algebra, &p).map_err(err)?;
        let want = yau_twist(&input.algebra, &input.alpha, &input.beta).map_err(err)?;
        ensure!(
            same_structure(&got, &want),
            "sample {i}: pseudotwistor differs from the Yau twist"
        );
    }
    Ok(())
}

fn twisting_and_smash() -> Outcome {
    let (h, a, act) = twisted_cyclic_self_action(Q, 4).map_err(err)?;
    let data = SmashData::new(h.clone(), a.clone(), act.clone());
    let ha = h.algebra();
    for m in -2..=2 {
        for n in -2..=2 {
            for p in -2..=2 {
                let r = smash_twisting_map(&data.clone().with_indices(m, n, p)).map_err(err)?;
                passes(&format!("R({m},{n},{p})"), check_twisting_map(&a, &ha, &r))?;
            }
        }
    }
    let sp = smash_product(&data).map_err(err)?;
    passes("A#H", check_bihom_algebra(&sp))?;

    // The same product as a Yau twist of the classical smash product.
    let classical_h = group_algebra(Q, 4).bialgebra;
    let classical = SmashData::new(classical_h.clone(), classical_h.algebra(), cyclic_self_action(Q, 4));
    let inv = cyclic_power(Q, 4, 3);
    let id = Matrix::identity(Q, 4);
    let expected = yau_twist(
        &smash_product(&classical).map_err(err)?,
        &inv.kron(&inv),
        &signed_inversion(Q, 4).kron(&id),
    )
    .map_err(err)?;
    ensure!(
        same_structure(&sp, &expected),
        "twisted smash product is not the Yau twist of the classical one"
    );

    let c = smash_comodule_structure(&data, &id, &signed_inversion(Q, 4)).map_err(err)?;
    ensure!(
        c.report.passed(),
        "A#H comodule algebra:\n{}",
        c.report.only_failures().render(3)
    );
    passes("A#H comodule algebra product", check_bihom_algebra(&c.algebra))?;

    let (dual, dual_act) = dual_module_algebra(&h).map_err(err)?;
    passes("H*", check_bihom_algebra(&dual))?;
    passes("H* module algebra", check_module_bihom_algebra(&h, &dual, &dual_act))?;
    let dual_data = SmashData::new(h.clone(), dual, dual_act);
    passes("H*#H", check_bihom_algebra(&smash_product(&dual_data).map_err(err)?))?;
    let (psi, omega) = dual_comodule_maps(&h).map_err(err)?;
    let c = smash_comodule_structure(&dual_data, &psi, &omega).map_err(err)?;
    ensure!(
        c.report.passed(),
        "H*#H comodule algebra:\n{}",
        c.report.only_failures().render(3)
    );
    Ok(())
}

fn quantum_demo() -> Outcome {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let tp = TwistParams::rational([r(2, 1), r(3, 1), r(5, 1), r(7, 1)], r(1, 2)).map_err(err)?;
    let grid = verify_smash_grid(2, &right_factors(), &tp, DEFAULT_BOUND).map_err(err)?;
    ensure!(grid.passed(), "smash formulas:\n{}", grid.only_failures().render(3));
    ensure!(
        grid.entries.len() == 81 * 4 * 4,
        "smash grid has {} entries",
        grid.entries.len()
    );
    let action = verify_action_grid(2, &tp, DEFAULT_BOUND);
    ensure!(
        action.passed(),
        "action formulas:\n{}",
        action.only_failures().render(3)
    );
    ensure!(
        action.entries.len() == 4 * 9,
        "action grid has {} entries",
        action.entries.len()
    );
    let conf = check_confluence(6);
    ensure!(conf.passed(), "confluence:\n{}", conf.only_failures().render(3));
    Ok(())
}

fn primitives() -> Outcome {
    let kc2 = group_algebra(Q, 2).bialgebra;
    let p = find_primitives(&kc2).map_err(err)?;
    ensure!(p.is_empty(), "kC2 over Q has {} primitives", p.len());

    let f2 = Field::prime(2).map_err(err)?;
    let dn = dual_numbers(f2).bialgebra;
    let p = find_primitives(&dn).map_err(err)?;
    ensure!(p.len() == 1, "F2[X]/(X^2) has {} primitives", p.len());

    let borel = restricted_borel(3).map_err(err)?;
    let mut by = BialgebraMaps::identity(borel.bialgebra.field(), borel.bialgebra.dim());
    by.alpha = restricted_borel_scaling(3, 2).map_err(err)?;
    let twisted = yau_twist_bialgebra(&borel.bialgebra, &by).map_err(err)?;

    for (name, h) in [("F2[X]/(X^2)", &dn), ("twisted restricted Borel", &twisted)] {
        let prims = find_primitives(h).map_err(err)?;
        for (i, x) in prims.iter().enumerate() {
            ensure!(
                h.omega.apply(x) == h.psi.apply(x),
                "{name}: omega != psi on primitive {i}"
            );
            for y in &prims {
                let b = primitive_bracket(h, x, y).map_err(err)?;
                ensure!(
                    primitive_witness(h, &b).map_err(err)?.is_none(),
                    "{name}: bracket is not primitive"
                );
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("example families", example_families),
        ("Yau twist soundness", yau_twist_soundness),
        ("commutator BiHom-Lie", commutator_bihom_lie),
        ("adjoint and semidirect", adjoint_and_semidirect),
        ("duality and convolution", duality_and_convolution),
        ("antipodes", antipodes),
        ("counterexample regressions", counterexamples),
        ("pseudotwistors", pseudotwistors),
        ("twisting maps and smash products", twisting_and_smash),
        ("quantum demo", quantum_demo),
        ("primitives", primitives),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.2}s)\n{why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
