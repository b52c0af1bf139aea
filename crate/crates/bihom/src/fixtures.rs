//! Small classical algebras, bialgebras and Hopf algebras used as inputs.

use crate::algebra::BiHomAlgebra;
use crate::bialgebra::{twist_module_algebra, BiHomBialgebra, BialgebraMaps, ModuleAlgebraAction};
use crate::error::Result;
use crate::exactnum::{Field, Scalar};
use crate::linalg::{vector, Bilinear, Matrix, Tensor3};
use crate::maps::tensor_square_product;

pub mod random;

fn int(field: Field, n: i64) -> Scalar {
    Scalar::from_i64(field, n)
}

/// A classical Hopf algebra: bialgebra with identity maps plus its antipode.
#[derive(Clone, Debug)]
pub struct Hopf {
    pub bialgebra: BiHomBialgebra,
    pub antipode: Matrix,
}

/// `𝕜[C_n]` with basis `g^0, …, g^{n−1}`.
pub fn group_algebra(field: Field, n: usize) -> Hopf {
    let one = Scalar::one(field);
    let mu = Tensor3::from_fn(field, (n, n, n), |i, j, k| {
        if (i + j) % n == k {
            one.clone()
        } else {
            Scalar::zero(field)
        }
    });
    let delta = Tensor3::from_fn(field, (n, n, n), |i, j, k| {
        if i == j && j == k {
            one.clone()
        } else {
            Scalar::zero(field)
        }
    });
    let labels = (0..n).map(|k| format!("g{k}")).collect();
    let bialgebra = BiHomBialgebra::classical(labels, mu, delta, Some(vector::basis(field, n, 0)), Some(vec![one; n]))
        .expect("consistent shapes");
    Hopf {
        bialgebra,
        antipode: cyclic_power(field, n, n as i64 - 1),
    }
}

/// `g^j ↦ g^{jk}` on `𝕜[C_n]`.
pub fn cyclic_power(field: Field, n: usize, k: i64) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| vector::basis(field, n, (j as i64 * k).rem_euclid(n as i64) as usize))
        .collect();
    Matrix::from_columns(field, n, &cols)
}

/// `g^j ↦ (−1)^j g^{−j}`, an involutive algebra automorphism of `𝕜[C_n]` for even `n`.
pub fn signed_inversion(field: Field, n: usize) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            vector::scale(&int(field, sign), &vector::basis(field, n, (n - j) % n))
        })
        .collect();
    Matrix::from_columns(field, n, &cols)
}

/// `𝕜[C_n]` acting on itself through `g^k · a = ρ^k(a)` with `ρ` the signed inversion.
pub fn cyclic_self_action(field: Field, n: usize) -> ModuleAlgebraAction {
    let rho = signed_inversion(field, n);
    let id = Matrix::identity(field, n);
    let mut action = Tensor3::zeros(field, n, n, n);
    for k in 0..n {
        let power = if k % 2 == 0 { &id } else { &rho };
        for a in 0..n {
            action.set_fiber(k, a, &power.column(a));
        }
    }
    ModuleAlgebraAction { action }
}

/// The Yau twist of [`cyclic_self_action`] with `alpha_H = psi_H` the
/// inversion `g ↦ g⁻¹`, `beta_H = omega_H = id`, `alpha_A` the inversion and
/// `beta_A` the signed inversion. All six maps are bijective.
pub fn twisted_cyclic_self_action(
    field: Field,
    n: usize,
) -> Result<(BiHomBialgebra, BiHomAlgebra, ModuleAlgebraAction)> {
    let h = group_algebra(field, n).bialgebra;
    let inv = cyclic_power(field, n, n as i64 - 1);
    let id = Matrix::identity(field, n);
    let maps = BialgebraMaps {
        alpha: inv.clone(),
        beta: id.clone(),
        psi: inv.clone(),
        omega: id,
    };
    twist_module_algebra(
        &h,
        &h.algebra(),
        &cyclic_self_action(field, n),
        &maps,
        &inv,
        &signed_inversion(field, n),
    )
}

/// The 4-dimensional Sweedler Hopf algebra on `1, g, x, gx`.
pub fn sweedler(field: Field) -> Hopf {
    let z = || Scalar::zero(field);
    let i = |n| int(field, n);
    let mut mu = Tensor3::zeros(field, 4, 4, 4);
    // Basis order: 0 = 1, 1 = g, 2 = x, 3 = gx.
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (1, 2)],
        [(1, 2), (-1, 3), (0, 0), (0, 0)],
        [(1, 3), (-1, 2), (0, 0), (0, 0)],
    ];
    for (a, row) in table.iter().enumerate() {
        for (b, &(c, k)) in row.iter().enumerate() {
            if c != 0 {
                mu.set(a, b, k, i(c));
            }
        }
    }
    let mut delta = Tensor3::zeros(field, 4, 4, 4);
    delta.set(0, 0, 0, i(1));
    delta.set(1, 1, 1, i(1));
    delta.set(2, 2, 0, i(1));
    delta.set(2, 1, 2, i(1));
    delta.set(3, 3, 1, i(1));
    delta.set(3, 0, 3, i(1));
    let bialgebra = BiHomBialgebra::classical(
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mu,
        delta,
        Some(vector::basis(field, 4, 0)),
        Some(vec![i(1), i(1), z(), z()]),
    )
    .expect("consistent shapes");
    let antipode = Matrix::from_columns(
        field,
        4,
        &[
            vector::from_ints(field, &[1, 0, 0, 0]),
            vector::from_ints(field, &[0, 1, 0, 0]),
            vector::from_ints(field, &[0, 0, 0, -1]),
            vector::from_ints(field, &[0, 0, 1, 0]),
        ],
    );
    Hopf { bialgebra, antipode }
}

/// `x ↦ λx` on the Sweedler algebra.
pub fn sweedler_scaling(field: Field, lambda: &Scalar) -> Matrix {
    let one = Scalar::one(field);
    Matrix::diagonal(field, &[one.clone(), one, lambda.clone(), lambda.clone()])
}

/// The Sweedler algebra acting on `𝕜[u]/(u²)` by `g·u = −u`, `x·u = 1`.
pub fn sweedler_on_dual_numbers(field: Field) -> ModuleAlgebraAction {
    let mut action = Tensor3::zeros(field, 4, 2, 2);
    let one = Scalar::one(field);
    for h in [0, 1] {
        action.set(h, 0, 0, one.clone());
    }
    action.set(0, 1, 1, one.clone());
    action.set(1, 1, 1, -&one);
    action.set(2, 1, 0, one.clone());
    action.set(3, 1, 0, one);
    ModuleAlgebraAction { action }
}

/// `𝕜[X]/(X²)` with `X` primitive; a bialgebra only in characteristic 2.
pub fn dual_numbers(field: Field) -> Hopf {
    let i = |n| int(field, n);
    let mut mu = Tensor3::zeros(field, 2, 2, 2);
    mu.set(0, 0, 0, i(1));
    mu.set(0, 1, 1, i(1));
    mu.set(1, 0, 1, i(1));
    let mut delta = Tensor3::zeros(field, 2, 2, 2);
    delta.set(0, 0, 0, i(1));
    delta.set(1, 0, 1, i(1));
    delta.set(1, 1, 0, i(1));
    let bialgebra = BiHomBialgebra::classical(
        vec!["1".into(), "X".into()],
        mu,
        delta,
        Some(vec![i(1), i(0)]),
        Some(vec![i(1), i(0)]),
    )
    .expect("consistent shapes");
    Hopf {
        bialgebra,
        antipode: Matrix::diagonal(field, &[i(1), i(-1)]),
    }
}

/// The monoid bialgebra on `{1, t}` with `t² = t`; it has no antipode.
pub fn idempotent_monoid(field: Field) -> BiHomBialgebra {
    let i = |n| int(field, n);
    let mut mu = Tensor3::zeros(field, 2, 2, 2);
    mu.set(0, 0, 0, i(1));
    mu.set(0, 1, 1, i(1));
    mu.set(1, 0, 1, i(1));
    mu.set(1, 1, 1, i(1));
    let mut delta = Tensor3::zeros(field, 2, 2, 2);
    delta.set(0, 0, 0, i(1));
    delta.set(1, 1, 1, i(1));
    BiHomBialgebra::classical(
        vec!["1".into(), "t".into()],
        mu,
        delta,
        Some(vec![i(1), i(0)]),
        Some(vec![i(1), i(1)]),
    )
    .expect("consistent shapes")
}

/// `𝕜[X]/(X^n)` with basis `1, X, …, X^{n−1}`.
pub fn truncated_polynomials(field: Field, n: usize) -> BiHomAlgebra {
    let mu = Tensor3::from_fn(field, (n, n, n), |i, j, k| {
        if i + j == k {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let labels = (0..n).map(|k| format!("X^{k}")).collect();
    let id = Matrix::identity(field, n);
    BiHomAlgebra::new(labels, mu, id.clone(), id, Some(vector::basis(field, n, 0))).expect("consistent shapes")
}

/// `X^j ↦ X^{jk}` on `𝕜[X]/(X^n)`, zero once the degree reaches `n`.
pub fn truncated_power_map(field: Field, n: usize, k: usize) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            if j * k < n {
                vector::basis(field, n, j * k)
            } else {
                vector::zeros(field, n)
            }
        })
        .collect();
    Matrix::from_columns(field, n, &cols)
}

/// The restricted enveloping algebra of `[x, y] = y` over `𝔽_p`:
/// basis `x^i y^j` (index `i·p + j`), `x^p = x`, `y^p = 0`, both primitive.
pub fn restricted_borel(p: u64) -> Result<Hopf> {
    let field = Field::prime(p)?;
    let n = p as usize;
    let d = n * n;
    let s = |v: i64| Scalar::from_i64(field, v);
    // x^e reduced with x^p = x.
    let reduce = |mut e: usize| {
        while e >= n {
            e -= n - 1;
        }
        e
    };
    let binom = |a: usize, b: usize| -> i64 {
        let mut r: i64 = 1;
        for t in 0..b {
            r = r * (a - t) as i64 / (t + 1) as i64;
        }
        r
    };
    let mut mu = Tensor3::zeros(field, d, d, d);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if b + e >= n {
                        continue;
                    }
                    // x^a (x − b)^c y^{b+e}
                    let mut fiber = vector::zeros(field, d);
                    for t in 0..=c {
                        let coeff = &s(binom(c, t)) * &s(-(b as i64)).pow((c - t) as i64).expect("nonnegative");
                        let k = reduce(a + t) * n + b + e;
                        fiber[k] += &coeff;
                    }
                    mu.set_fiber(a * n + b, c * n + e, &fiber);
                }
            }
        }
    }
    let unit = vector::basis(field, d, 0);
    let x = vector::basis(field, d, n);
    let y = vector::basis(field, d, 1);
    // Coproducts computed multiplicatively in H ⊗ H.
    let prod = Bilinear::new(&mu);
    let prim = |v: &[Scalar]| vector::add(&vector::tensor(v, &unit), &vector::tensor(&unit, v));
    let (dx, dy) = (prim(&x), prim(&y));
    let mut x_pows = vec![vector::tensor(&unit, &unit)];
    for _ in 1..n {
        let last = x_pows.last().expect("nonempty");
        x_pows.push(tensor_square_product(&prod, d, last, &dx));
    }
    let mut delta = Tensor3::zeros(field, d, d, d);
    for i in 0..n {
        let mut cur = x_pows[i].clone();
        for j in 0..n {
            for (k, c) in cur.iter().enumerate() {
                delta.set(i * n + j, k / d, k % d, c.clone());
            }
            cur = tensor_square_product(&prod, d, &cur, &dy);
        }
    }
    let mut counit = vector::zeros(field, d);
    counit[0] = Scalar::one(field);
    let labels = (0..d).map(|k| format!("x^{}y^{}", k / n, k % n)).collect();
    let bialgebra = BiHomBialgebra::classical(labels, mu, delta, Some(unit), Some(counit))?;
    // S(x^i y^j) = (−y)^j (−x)^i computed from the anti-multiplicativity.
    let prod = Bilinear::new(&bialgebra.mu);
    let minus = |v: &[Scalar]| vector::scale(&s(-1), v);
    let mut cols = vec![vector::zeros(field, d); d];
    for i in 0..n {
        for j in 0..n {
            let mut yj = bialgebra.unit.clone().expect("unit");
            for _ in 0..j {
                yj = prod.apply(&yj, &minus(&y));
            }
            let mut v = yj;
            for _ in 0..i {
                v = prod.apply(&v, &minus(&x));
            }
            cols[i * n + j] = v;
        }
    }
    Ok(Hopf {
        antipode: Matrix::from_columns(field, d, &cols),
        bialgebra,
    })
}

/// `x ↦ x`, `y ↦ cy` on the restricted Borel algebra.
pub fn restricted_borel_scaling(p: u64, c: i64) -> Result<Matrix> {
    let field = Field::prime(p)?;
    let n = p as usize;
    let c = Scalar::from_i64(field, c);
    let diag: Vec<Scalar> = (0..n * n)
        .map(|k| c.pow((k % n) as i64).expect("nonnegative"))
        .collect();
    Ok(Matrix::diagonal(field, &diag))
}
