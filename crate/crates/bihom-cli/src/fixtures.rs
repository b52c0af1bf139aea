//! The structure files shipped in `fixtures/`.

use bihom::algebra::{example_family, Family};
use bihom::bialgebra::{hopf_to_monoidal, ModuleAlgebraAction};
use bihom::fixtures::{group_algebra, sweedler, sweedler_scaling, twisted_cyclic_self_action};
use bihom::lie::sl2;
use bihom::twisting::{canonical_pseudotwistor, TwistingMap};
use bihom::{Field, Matrix, Result, Scalar};

use crate::format::Structure;

/// `(file name, contents)` for every shipped fixture.
pub fn standard_fixtures() -> Result<Vec<(&'static str, Structure)>> {
    let q = Field::Rational;
    let int = |n| Scalar::from_i64(q, n);
    let (h, a, action) = twisted_cyclic_self_action(q, 4)?;
    let sw = sweedler(q);
    let two = int(2);
    let half = Scalar::ratio(q, 1, 2)?;
    let monoidal = hopf_to_monoidal(
        &sw.bialgebra,
        &sw.antipode,
        &sweedler_scaling(q, &two),
        &sweedler_scaling(q, &half),
    )?;
    let c2 = group_algebra(q, 2).bialgebra.algebra();
    let sign = Matrix::diagonal(q, &[int(1), int(-1)]);
    Ok(vec![
        (
            "family1.json",
            Structure::Algebra(example_family(Family::First, &int(3), &int(2))?),
        ),
        (
            "family2.json",
            Structure::Algebra(example_family(Family::Second, &int(2), &int(5))?),
        ),
        ("kc4_bialg.json", Structure::Bialgebra(h)),
        (
            "kc4_selfmod.json",
            Structure::Action {
                algebra: a,
                action: ModuleAlgebraAction { action: action.action },
            },
        ),
        ("sweedler.json", Structure::Bialgebra(sw.bialgebra)),
        ("sweedler_antipode.json", Structure::Map(sw.antipode)),
        ("sweedler_monoidal.json", Structure::Bialgebra(monoidal.bialgebra)),
        ("kc2.json", Structure::Algebra(c2.clone())),
        ("kc2_sign.json", Structure::Map(sign.clone())),
        ("flip_kc2.json", Structure::Map(TwistingMap::flip(q, 2, 2).r)),
        (
            "kc2_pseudotwistor.json",
            Structure::Pseudotwistor(canonical_pseudotwistor(&c2, &sign, &Matrix::identity(q, 2))?),
        ),
        ("sl2.json", Structure::Lie(sl2(q))),
    ])
}
