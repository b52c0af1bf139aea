//! Pseudotwistors, twisting maps and twisted tensor products.
//!
//! Maps on tensor powers are stored as explicit matrices but every identity
//! is evaluated column by column through sparse Kronecker chains, so no
//! product of two tensor-power matrices is ever formed.

use crate::algebra::{check_bihom_algebra, tensor_product, BiHomAlgebra};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{vector, Matrix, Tensor3};
use crate::maps::{
    apply_chain, chain_identity, commute_witness, materialize, multiplicative_witness, require_square, Kron,
    SparseMatrix,
};
use crate::report::{unflatten, CheckReport, Witness};

/// Companions act on `D⊗D⊗D` as dense matrices; above this many basis
/// tensors they are not materialized.
pub const MAX_COMPANION_DIM: usize = 512;

pub mod axiom {
    pub const HYP_MULT_ALPHA2: &str = "hypothesis:multiplicative(alpha2)";
    pub const HYP_MULT_BETA2: &str = "hypothesis:multiplicative(beta2)";
    pub const T_ALPHA2: &str = "(alpha2⊗alpha2)T=T(alpha2⊗alpha2)";
    pub const T_BETA2: &str = "(beta2⊗beta2)T=T(beta2⊗beta2)";
    pub const T_ALPHA: &str = "(alpha⊗alpha)T=T(alpha⊗alpha)";
    pub const T_BETA: &str = "(beta⊗beta)T=T(beta⊗beta)";
    pub const LEFT_COMPANION: &str = "T(alpha⊗mu)=(alpha⊗mu)T1(T⊗id)";
    pub const RIGHT_COMPANION: &str = "T(mu⊗beta)=(mu⊗beta)T2(id⊗T)";
    pub const COMPANIONS: &str = "T1(T⊗id)(alpha2⊗T)=T2(id⊗T)(T⊗beta2)";

    pub const R_ALPHA: &str = "(alphaA⊗alphaB)R=R(alphaB⊗alphaA)";
    pub const R_BETA: &str = "(betaA⊗betaB)R=R(betaB⊗betaA)";
    pub const R_LEFT: &str = "R(alphaB⊗muA)=(muA⊗betaB)(id⊗R)(id⊗alphaB/betaB⊗id)(R⊗id)";
    pub const R_RIGHT: &str = "R(muB⊗betaA)=(alphaA⊗muB)(R⊗id)(id⊗betaA/alphaA⊗id)(id⊗R)";
    pub const R_EXCHANGE: &str = "exchange:(id⊗betaB/alphaB)R(alphaB/betaB⊗id)=(alphaA/betaA⊗id)R(id⊗betaA/alphaA)";
    pub const R_ELEMENTWISE: &str = "elementwise evaluation agrees with matrix evaluation";
}

/// A linear map `T` on `D⊗D` with companions `T1`, `T2` on `D⊗D⊗D`,
/// relative to the extra endomorphisms `alpha2`, `beta2` of `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudotwistor {
    pub t: Matrix,
    pub t1: Matrix,
    pub t2: Matrix,
    pub alpha2: Matrix,
    pub beta2: Matrix,
}

/// `R: B⊗A → A⊗B`. Columns are indexed by `b·dim A + a`, rows by `a·dim B + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMap {
    pub r: Matrix,
}

impl TwistingMap {
    /// `b⊗a ↦ a⊗b`.
    pub fn flip(field: Field, dim_a: usize, dim_b: usize) -> Self {
        let mut r = Matrix::zeros(field, dim_a * dim_b, dim_b * dim_a);
        for a in 0..dim_a {
            for b in 0..dim_b {
                r.set(a * dim_b + b, b * dim_a + a, Scalar::one(field));
            }
        }
        TwistingMap { r }
    }
}

fn record_pair_commutes(report: &mut CheckReport, maps: &[(&str, &Matrix)]) {
    for (i, (n1, m1)) in maps.iter().enumerate() {
        for (n2, m2) in &maps[i + 1..] {
            report.record(format!("hypothesis:commute({n1},{n2})"), commute_witness(m1, m2));
        }
    }
}

/// Verifies the hypotheses on `alpha2`, `beta2` and the seven defining
/// identities of a pseudotwistor for `d`.
pub fn check_pseudotwistor(d: &BiHomAlgebra, p: &Pseudotwistor) -> Result<CheckReport> {
    d.validate()?;
    let (n, f) = (d.dim(), d.field());
    require_square("alpha2", &p.alpha2, n, f)?;
    require_square("beta2", &p.beta2, n, f)?;
    require_square("T", &p.t, n * n, f)?;
    require_square("T1", &p.t1, n * n * n, f)?;
    require_square("T2", &p.t2, n * n * n, f)?;

    let mut report = CheckReport::new();
    report.record(axiom::HYP_MULT_ALPHA2, multiplicative_witness(&d.mu, &p.alpha2));
    report.record(axiom::HYP_MULT_BETA2, multiplicative_witness(&d.mu, &p.beta2));
    record_pair_commutes(
        &mut report,
        &[
            ("alpha", &d.alpha),
            ("beta", &d.beta),
            ("alpha2", &p.alpha2),
            ("beta2", &p.beta2),
        ],
    );

    let id = Matrix::identity(f, n);
    let mu = d.mu.bilinear_matrix();
    let t = Kron::new(&[&p.t]);
    let square = [n, n];
    for (name, m) in [
        (axiom::T_ALPHA2, &p.alpha2),
        (axiom::T_BETA2, &p.beta2),
        (axiom::T_ALPHA, &d.alpha),
        (axiom::T_BETA, &d.beta),
    ] {
        let mm = Kron::new(&[m, m]);
        report.record(name, chain_identity(&[&mm, &t], &[&t, &mm], &square, f));
    }

    let cube = [n, n, n];
    let t_id = Kron::new(&[&p.t, &id]);
    let id_t = Kron::new(&[&id, &p.t]);
    let t1 = Kron::new(&[&p.t1]);
    let t2 = Kron::new(&[&p.t2]);
    let alpha_mu = Kron::new(&[&d.alpha, &mu]);
    let mu_beta = Kron::new(&[&mu, &d.beta]);
    report.record(
        axiom::LEFT_COMPANION,
        chain_identity(&[&alpha_mu, &t], &[&t_id, &t1, &alpha_mu], &cube, f),
    );
    report.record(
        axiom::RIGHT_COMPANION,
        chain_identity(&[&mu_beta, &t], &[&id_t, &t2, &mu_beta], &cube, f),
    );
    let alpha2_t = Kron::new(&[&p.alpha2, &p.t]);
    let t_beta2 = Kron::new(&[&p.t, &p.beta2]);
    report.record(
        axiom::COMPANIONS,
        chain_identity(&[&alpha2_t, &t_id, &t1], &[&t_beta2, &id_t, &t2], &cube, f),
    );
    Ok(report)
}

/// `(D, μ∘T, alpha∘alpha2, beta∘beta2)`.
pub fn apply_pseudotwistor(d: &BiHomAlgebra, p: &Pseudotwistor) -> Result<BiHomAlgebra> {
    let report = check_pseudotwistor(d, p)?;
    if !report.passed() {
        return Err(Error::PseudotwistorInvalid(Box::new(report.only_failures())));
    }
    twist_product(d, &p.t, &p.alpha2, &p.beta2)
}

/// Builds `μ∘T` and keeps the old unit only if it is still a unit.
fn twist_product(d: &BiHomAlgebra, t: &Matrix, alpha2: &Matrix, beta2: &Matrix) -> Result<BiHomAlgebra> {
    let n = d.dim();
    let mu = Kron::new(&[&d.mu.bilinear_matrix()]);
    let t = SparseMatrix::new(t);
    let mut out = Tensor3::zeros(d.field(), n, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut col = vector::zeros(d.field(), n * n);
            for (r, c) in t.column(i * n + j) {
                col[*r] = c.clone();
            }
            out.set_fiber(i, j, &mu.apply(&col));
        }
    }
    let alpha = &d.alpha * alpha2;
    let beta = &d.beta * beta2;
    let unit = d.unit.clone().filter(|u| is_unit(&out, &alpha, &beta, u));
    BiHomAlgebra::new(d.labels.clone(), out, alpha, beta, unit)
}

fn is_unit(mu: &Tensor3, alpha: &Matrix, beta: &Matrix, u: &[Scalar]) -> bool {
    let n = u.len();
    if alpha.apply(u) != u || beta.apply(u) != u {
        return false;
    }
    let prod = crate::linalg::Bilinear::new(mu);
    (0..n).all(|i| {
        let e = vector::basis(mu.field(), n, i);
        prod.apply(&e, u) == alpha.column(i) && prod.apply(u, &e) == beta.column(i)
    })
}

/// `T = alpha2⊗beta2`, `T1 = id⊗id⊗beta2`, `T2 = alpha2⊗id⊗id`.
pub fn canonical_pseudotwistor(d: &BiHomAlgebra, alpha2: &Matrix, beta2: &Matrix) -> Result<Pseudotwistor> {
    d.validate()?;
    let (n, f) = (d.dim(), d.field());
    require_square("alpha2", alpha2, n, f)?;
    require_square("beta2", beta2, n, f)?;
    if n * n * n > MAX_COMPANION_DIM {
        return Err(Error::TooLarge(n * n * n));
    }
    let mut report = CheckReport::new();
    report.record(axiom::HYP_MULT_ALPHA2, multiplicative_witness(&d.mu, alpha2));
    report.record(axiom::HYP_MULT_BETA2, multiplicative_witness(&d.mu, beta2));
    record_pair_commutes(
        &mut report,
        &[
            ("alpha", &d.alpha),
            ("beta", &d.beta),
            ("alpha2", alpha2),
            ("beta2", beta2),
        ],
    );
    if !report.passed() {
        return Err(Error::HypothesisFailure(Box::new(report.only_failures())));
    }
    let id = Matrix::identity(f, n);
    Ok(Pseudotwistor {
        t: alpha2.kron(beta2),
        t1: Matrix::kron_all(&[&id, &id, beta2]),
        t2: Matrix::kron_all(&[alpha2, &id, &id]),
        alpha2: alpha2.clone(),
        beta2: beta2.clone(),
    })
}

fn require_compatible(a: &BiHomAlgebra, b: &BiHomAlgebra, r: &TwistingMap) -> Result<()> {
    a.validate()?;
    b.validate()?;
    if a.field() != b.field() || r.r.field() != a.field() {
        return Err(Error::mixed(a.field(), b.field()));
    }
    let n = a.dim() * b.dim();
    if r.r.rows() != n || r.r.cols() != n {
        return Err(Error::shape(format!("twisting map must be {n}×{n}")));
    }
    Ok(())
}

/// The structure maps of both factors and the quotients that appear in
/// the twisting-map identities.
struct Quotients {
    /// `alpha_B beta_B⁻¹`
    b_ab: Matrix,
    /// `alpha_B⁻¹ beta_B`
    b_ba: Matrix,
    /// `alpha_A⁻¹ beta_A`
    a_ba: Matrix,
    /// `alpha_A beta_A⁻¹`
    a_ab: Matrix,
}

impl Quotients {
    fn new(a: &BiHomAlgebra, b: &BiHomAlgebra) -> Result<Self> {
        let (aa, ba) = (a.alpha.inverse()?, a.beta.inverse()?);
        let (ab, bb) = (b.alpha.inverse()?, b.beta.inverse()?);
        Ok(Quotients {
            b_ab: &b.alpha * &bb,
            b_ba: &ab * &b.beta,
            a_ba: &aa * &a.beta,
            a_ab: &a.alpha * &ba,
        })
    }
}

/// `R(b⊗a)` as a list of pairs `(a_R, b_R)`, one per basis vector of `A`.
fn sweedler(r: &Kron, da: usize, db: usize, b: &[Scalar], a: &[Scalar]) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let image = r.apply(&vector::tensor(b, a));
    let field = image[0].field();
    (0..da)
        .filter_map(|x| {
            let part = &image[x * db..(x + 1) * db];
            (!vector::is_zero(part)).then(|| (vector::basis(field, da, x), part.to_vec()))
        })
        .collect()
}

fn sum_tensors(field: Field, n: usize, terms: impl IntoIterator<Item = Vec<Scalar>>) -> Vec<Scalar> {
    terms
        .into_iter()
        .fold(vector::zeros(field, n), |acc, t| vector::add(&acc, &t))
}

/// Both sides of one identity at a basis tuple, by matrix evaluation.
type SideFn<'a> = dyn Fn(usize, &[usize]) -> (Vec<Scalar>, Vec<Scalar>) + 'a;

/// Evaluates the four twisting-map identities elementwise, term by term in
/// the `(a_R, b_R)` decomposition, and returns the first basis tuple where
/// either side disagrees with the matrix evaluation.
fn elementwise_disagreement(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    r: &Kron,
    q: &Quotients,
    matrix_sides: &SideFn<'_>,
) -> Option<Witness> {
    let (da, db, f) = (a.dim(), b.dim(), a.field());
    let n = da * db;
    let ea = |i: usize| vector::basis(f, da, i);
    let eb = |i: usize| vector::basis(f, db, i);
    let pairs = |bv: &[Scalar], av: &[Scalar]| sweedler(r, da, db, bv, av);
    let collect = |ps: Vec<(Vec<Scalar>, Vec<Scalar>)>,
                   fa: &dyn Fn(&[Scalar]) -> Vec<Scalar>,
                   fb: &dyn Fn(&[Scalar]) -> Vec<Scalar>| {
        sum_tensors(f, n, ps.into_iter().map(|(x, y)| vector::tensor(&fa(&x), &fb(&y))))
    };
    let same = |v: &[Scalar]| v.to_vec();

    for (which, dims) in [
        (0usize, vec![db, da]),
        (1, vec![db, da]),
        (2, vec![db, da, da]),
        (3, vec![db, db, da]),
    ] {
        for idx in crate::report::tuples(&dims) {
            let (lhs, rhs) = match which {
                0 | 1 => {
                    let (ma, mb) = if which == 0 {
                        (&a.alpha, &b.alpha)
                    } else {
                        (&a.beta, &b.beta)
                    };
                    let (bv, av) = (eb(idx[0]), ea(idx[1]));
                    let l = collect(pairs(&bv, &av), &|x| ma.apply(x), &|y| mb.apply(y));
                    let r2 = collect(pairs(&mb.apply(&bv), &ma.apply(&av)), &same, &same);
                    (l, r2)
                }
                2 => {
                    let (bv, av, av2) = (eb(idx[0]), ea(idx[1]), ea(idx[2]));
                    let l = collect(pairs(&b.alpha.apply(&bv), &a.product(&av, &av2)), &same, &same);
                    let mut terms = Vec::new();
                    for (a_r, b_r) in pairs(&bv, &av) {
                        for (a2_r, x_r) in pairs(&q.b_ab.apply(&b_r), &av2) {
                            terms.push(vector::tensor(&a.product(&a_r, &a2_r), &b.beta.apply(&x_r)));
                        }
                    }
                    (l, sum_tensors(f, n, terms))
                }
                _ => {
                    let (bv, bv2, av) = (eb(idx[0]), eb(idx[1]), ea(idx[2]));
                    let l = collect(pairs(&b.product(&bv, &bv2), &a.beta.apply(&av)), &same, &same);
                    let mut terms = Vec::new();
                    for (a_r, b2_r) in pairs(&bv2, &av) {
                        for (y_r, b_r) in pairs(&bv, &q.a_ba.apply(&a_r)) {
                            terms.push(vector::tensor(&a.alpha.apply(&y_r), &b.product(&b_r, &b2_r)));
                        }
                    }
                    (l, sum_tensors(f, n, terms))
                }
            };
            let (ml, mr) = matrix_sides(which, &idx);
            if ml != lhs || mr != rhs {
                return Some(Witness::new(idx, [ml, mr].concat(), [lhs, rhs].concat()));
            }
        }
    }
    None
}

/// Verifies that `r` is a twisting map between `a` and `b`, plus the
/// exchange identity every twisting map satisfies.
pub fn check_twisting_map(a: &BiHomAlgebra, b: &BiHomAlgebra, r: &TwistingMap) -> Result<CheckReport> {
    require_compatible(a, b, r)?;
    let q = Quotients::new(a, b)?;
    let (da, db, f) = (a.dim(), b.dim(), a.field());
    let (ida, idb) = (Matrix::identity(f, da), Matrix::identity(f, db));
    let (mua, mub) = (a.mu.bilinear_matrix(), b.mu.bilinear_matrix());
    let rk = Kron::new(&[&r.r]);

    let r_alpha = (Kron::new(&[&b.alpha, &a.alpha]), Kron::new(&[&a.alpha, &b.alpha]));
    let r_beta = (Kron::new(&[&b.beta, &a.beta]), Kron::new(&[&a.beta, &b.beta]));
    let left_l = [Kron::new(&[&b.alpha, &mua]), rk.clone()];
    let left_r = [
        Kron::new(&[&r.r, &ida]),
        Kron::new(&[&ida, &q.b_ab, &ida]),
        Kron::new(&[&ida, &r.r]),
        Kron::new(&[&mua, &b.beta]),
    ];
    let right_l = [Kron::new(&[&mub, &a.beta]), rk.clone()];
    let right_r = [
        Kron::new(&[&idb, &r.r]),
        Kron::new(&[&idb, &q.a_ba, &idb]),
        Kron::new(&[&r.r, &idb]),
        Kron::new(&[&a.alpha, &mub]),
    ];

    let mut report = CheckReport::new();
    report.record(
        axiom::R_ALPHA,
        chain_identity(&[&rk, &r_alpha.1], &[&r_alpha.0, &rk], &[db, da], f),
    );
    report.record(
        axiom::R_BETA,
        chain_identity(&[&rk, &r_beta.1], &[&r_beta.0, &rk], &[db, da], f),
    );
    report.record(
        axiom::R_LEFT,
        chain_identity(&refs(&left_l), &refs(&left_r), &[db, da, da], f),
    );
    report.record(
        axiom::R_RIGHT,
        chain_identity(&refs(&right_l), &refs(&right_r), &[db, db, da], f),
    );

    let ex_l = [Kron::new(&[&q.b_ab, &ida]), rk.clone(), Kron::new(&[&ida, &q.b_ba])];
    let ex_r = [Kron::new(&[&idb, &q.a_ba]), rk.clone(), Kron::new(&[&q.a_ab, &idb])];
    report.record(
        axiom::R_EXCHANGE,
        chain_identity(&refs(&ex_l), &refs(&ex_r), &[db, da], f),
    );

    let matrix_sides = |which: usize, idx: &[usize]| {
        let (l, r2, dims): (Vec<&Kron>, Vec<&Kron>, Vec<usize>) = match which {
            0 => (vec![&rk, &r_alpha.1], vec![&r_alpha.0, &rk], vec![db, da]),
            1 => (vec![&rk, &r_beta.1], vec![&r_beta.0, &rk], vec![db, da]),
            2 => (refs(&left_l), refs(&left_r), vec![db, da, da]),
            _ => (refs(&right_l), refs(&right_r), vec![db, db, da]),
        };
        let total: usize = dims.iter().product();
        let flat = idx.iter().zip(&dims).fold(0, |acc, (i, d)| acc * d + i);
        let e = vector::basis(f, total, flat);
        (apply_chain(&l, &e), apply_chain(&r2, &e))
    };
    report.record(
        axiom::R_ELEMENTWISE,
        elementwise_disagreement(a, b, &rk, &q, &matrix_sides),
    );
    Ok(report)
}

fn refs(ks: &[Kron]) -> Vec<&Kron> {
    ks.iter().collect()
}

/// `T((a⊗b)⊗(a'⊗b')) = (a⊗b_R)⊗(a'_R⊗b')` on `(A⊗B)⊗(A⊗B)`.
fn twisted_tensor_t(a: &BiHomAlgebra, b: &BiHomAlgebra, r: &TwistingMap) -> Matrix {
    let (da, db, f) = (a.dim(), b.dim(), a.field());
    // The middle factor is R followed by the swap A⊗B → B⊗A.
    let swap = TwistingMap::flip(f, db, da).r;
    Matrix::kron_all(&[&Matrix::identity(f, da), &(&swap * &r.r), &Matrix::identity(f, db)])
}

/// `R` applied to the B-slot of the first copy and the A-slot of the third
/// copy of `A⊗B` in `(A⊗B)^{⊗3}`, all other slots untouched.
fn apply_outer(r: &SparseMatrix, da: usize, db: usize, x: &[Scalar]) -> Vec<Scalar> {
    let dims = [da, db, da, db, da, db];
    let mut out = vector::zeros(x[0].field(), x.len());
    for (n, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = unflatten(n, &dims);
        for (row, e) in r.column(s[1] * da + s[4]) {
            let (new_a, new_b) = (row / db, row % db);
            let moved = [s[0], new_b, s[2], s[3], new_a, s[5]];
            let flat = moved.iter().zip(&dims).fold(0, |acc, (i, d)| acc * d + i);
            out[flat] += &(c * e);
        }
    }
    out
}

/// The pseudotwistor on the tensor product `A⊗B` induced by `r`, with
/// both companions materialized. Refuses sizes above [`MAX_COMPANION_DIM`].
pub fn twisted_tensor_pseudotwistor(a: &BiHomAlgebra, b: &BiHomAlgebra, r: &TwistingMap) -> Result<Pseudotwistor> {
    require_compatible(a, b, r)?;
    let (da, db, f) = (a.dim(), b.dim(), a.field());
    let n = da * db;
    if n * n * n > MAX_COMPANION_DIM {
        return Err(Error::TooLarge(n * n * n));
    }
    let q = Quotients::new(a, b)?;
    let (ida, idb) = (Matrix::identity(f, da), Matrix::identity(f, db));
    let sr = SparseMatrix::new(&r.r);
    let slot2 = |m: &Matrix| Kron::new(&[&ida, m, &ida, &idb, &ida, &idb]);
    let slot5 = |m: &Matrix| Kron::new(&[&ida, &idb, &ida, &idb, m, &idb]);
    let (pre1, post1) = (slot2(&q.b_ab), slot2(&q.b_ba));
    let (pre2, post2) = (slot5(&q.a_ba), slot5(&q.a_ab));
    let n3 = n * n * n;
    let t1 = materialize(f, n3, n3, |e| post1.apply(&apply_outer(&sr, da, db, &pre1.apply(e))));
    let t2 = materialize(f, n3, n3, |e| post2.apply(&apply_outer(&sr, da, db, &pre2.apply(e))));
    let id = Matrix::identity(f, n);
    Ok(Pseudotwistor {
        t: twisted_tensor_t(a, b, r),
        t1,
        t2,
        alpha2: id.clone(),
        beta2: id,
    })
}

/// `A⊗_R B` with `(a⊗b)(a'⊗b') = a a'_R ⊗ b_R b'` and maps
/// `alpha_A⊗alpha_B`, `beta_A⊗beta_B`.
///
/// The product is `μ_{A⊗B}∘T` for `T = id⊗R⊗id`. When `(dim A·dim B)³`
/// fits under [`MAX_COMPANION_DIM`], `T` is also verified as a
/// pseudotwistor with its companions.
pub fn twisted_tensor_product(a: &BiHomAlgebra, b: &BiHomAlgebra, r: &TwistingMap) -> Result<BiHomAlgebra> {
    let report = check_twisting_map(a, b, r)?;
    if !report.passed() {
        return Err(Error::TwistingMapInvalid(Box::new(report.only_failures())));
    }
    let d = tensor_product(a, b)?;
    let n = d.dim();
    if n * n * n <= MAX_COMPANION_DIM {
        let p = twisted_tensor_pseudotwistor(a, b, r)?;
        return apply_pseudotwistor(&d, &p);
    }
    let id = Matrix::identity(d.field(), n);
    twist_product(&d, &twisted_tensor_t(a, b, r), &id, &id)
}

/// Turns a classical twisting map `p` between associative algebras into a
/// twisting map between their Yau twists:
/// `U(b⊗a) = beta_A⁻¹(beta_A(a)_P) ⊗ alpha_B⁻¹(alpha_B(b)_P)`.
#[allow(clippy::too_many_arguments)]
pub fn lift_twisting_map(
    a: &BiHomAlgebra,
    b: &BiHomAlgebra,
    p: &TwistingMap,
    alpha_a: &Matrix,
    beta_a: &Matrix,
    alpha_b: &Matrix,
    beta_b: &Matrix,
) -> Result<TwistingMap> {
    require_compatible(a, b, p)?;
    let (da, db, f) = (a.dim(), b.dim(), a.field());
    for (name, m, n) in [
        ("alphaA", alpha_a, da),
        ("betaA", beta_a, da),
        ("alphaB", alpha_b, db),
        ("betaB", beta_b, db),
    ] {
        require_square(name, m, n, f)?;
    }
    let mut report = CheckReport::new();
    for (name, alg) in [("A", a), ("B", b)] {
        let plain = alg.alpha.is_identity() && alg.beta.is_identity();
        report.record(
            format!("hypothesis:{name} has identity structure maps"),
            (!plain).then(|| Witness::new(vec![], vec![], vec![])),
        );
        report.merge(name, check_bihom_algebra(alg)?);
    }
    report.merge("P", check_twisting_map(a, b, p)?);
    for (name, alg, m) in [
        ("alphaA", a, alpha_a),
        ("betaA", a, beta_a),
        ("alphaB", b, alpha_b),
        ("betaB", b, beta_b),
    ] {
        report.record(
            format!("hypothesis:multiplicative({name})"),
            multiplicative_witness(&alg.mu, m),
        );
        report.record(
            format!("hypothesis:invertible({name})"),
            (!m.is_invertible()).then(|| Witness::new(vec![], vec![], vec![])),
        );
    }
    report.record("hypothesis:commute(alphaA,betaA)", commute_witness(alpha_a, beta_a));
    report.record("hypothesis:commute(alphaB,betaB)", commute_witness(alpha_b, beta_b));
    let pk = Kron::new(&[&p.r]);
    for (name, ma, mb) in [("alpha", alpha_a, alpha_b), ("beta", beta_a, beta_b)] {
        let (ba, ab) = (Kron::new(&[mb, ma]), Kron::new(&[ma, mb]));
        report.record(
            format!("hypothesis:({name}A⊗{name}B)P=P({name}B⊗{name}A)"),
            chain_identity(&[&pk, &ab], &[&ba, &pk], &[db, da], f),
        );
    }
    if !report.passed() {
        return Err(Error::HypothesisFailure(Box::new(report.only_failures())));
    }
    let pre = Kron::new(&[alpha_b, beta_a]);
    let post = Kron::new(&[&beta_a.inverse()?, &alpha_b.inverse()?]);
    let n = da * db;
    Ok(TwistingMap {
        r: materialize(f, n, n, |e| apply_chain(&[&pre, &pk, &post], e)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{axiom as alg_axiom, yau_twist};
    use crate::fixtures::{group_algebra, random, signed_inversion, truncated_polynomials};

    const Q: Field = Field::Rational;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(Q, n)
    }

    fn left_projection_algebra() -> BiHomAlgebra {
        // e_i e_j = e_i
        let mu = Tensor3::from_fn(Q, (2, 2, 2), |i, _, k| if i == k { s(1) } else { s(0) });
        let alpha = Matrix::identity(Q, 2);
        let beta = Matrix::from_ints(Q, &[&[1, 1], &[0, 0]]);
        BiHomAlgebra::new(vec!["e1".into(), "e2".into()], mu, alpha, beta, None).unwrap()
    }

    fn affine_map(c: &Scalar) -> Matrix {
        // e1 ↦ e1, e2 ↦ c e1 + (1 − c) e2
        let one = Scalar::one(Q);
        Matrix::from_rows(Q, vec![vec![one.clone(), c.clone()], vec![s(0), &one - c]]).unwrap()
    }

    #[test]
    fn two_dimensional_example_table() {
        let d = left_projection_algebra();
        assert!(check_bihom_algebra(&d).unwrap().passed());
        let a = crate::exactnum::parse_scalar(Q, "2/3").unwrap();
        let b = s(5);
        let (al, be) = (affine_map(&a), affine_map(&b));
        let p = canonical_pseudotwistor(&d, &al, &be).unwrap();
        assert!(check_pseudotwistor(&d, &p).unwrap().passed());
        let t = apply_pseudotwistor(&d, &p).unwrap();
        let one_minus_a = &Scalar::one(Q) - &a;
        let e1 = vec![s(1), s(0)];
        let mixed = vec![a.clone(), one_minus_a.clone()];
        assert_eq!(t.mu.fiber(0, 0), &e1[..]);
        assert_eq!(t.mu.fiber(0, 1), &e1[..]);
        assert_eq!(t.mu.fiber(1, 0), &mixed[..]);
        assert_eq!(t.mu.fiber(1, 1), &mixed[..]);
        assert_eq!(t.alpha.column(1), mixed);
        assert_eq!(t.beta.column(1), e1);
        assert_eq!(t.beta.column(0), e1);
        assert!(check_bihom_algebra(&t).unwrap().passed());
        assert_eq!(t, yau_twist(&d, &al, &be).unwrap());
    }

    #[test]
    fn identity_pseudotwistor_changes_nothing() {
        let d = left_projection_algebra();
        let id = Matrix::identity(Q, 2);
        let p = canonical_pseudotwistor(&d, &id, &id).unwrap();
        assert!(p.t.is_identity() && p.t1.is_identity() && p.t2.is_identity());
        assert_eq!(apply_pseudotwistor(&d, &p).unwrap(), d);
    }

    #[test]
    fn wrong_companion_is_detected() {
        let d = left_projection_algebra();
        let al = affine_map(&s(3));
        let mut p = canonical_pseudotwistor(&d, &al, &Matrix::identity(Q, 2)).unwrap();
        p.t2 = Matrix::identity(Q, 8);
        let report = check_pseudotwistor(&d, &p).unwrap();
        assert!(!report.holds(axiom::COMPANIONS));
        assert!(report.holds(axiom::LEFT_COMPANION));
        assert!(matches!(
            apply_pseudotwistor(&d, &p),
            Err(Error::PseudotwistorInvalid(_))
        ));
    }

    #[test]
    fn canonical_matches_yau_twist_on_samples() {
        let mut rng = random::rng(11);
        for _ in 0..15 {
            let input = random::associative_with_maps(&mut rng, Q, 4, false);
            let p = canonical_pseudotwistor(&input.algebra, &input.alpha, &input.beta).unwrap();
            assert!(check_pseudotwistor(&input.algebra, &p).unwrap().passed());
            assert_eq!(
                apply_pseudotwistor(&input.algebra, &p).unwrap(),
                yau_twist(&input.algebra, &input.alpha, &input.beta).unwrap()
            );
        }
    }

    #[test]
    fn canonical_rejects_non_multiplicative_map() {
        let d = left_projection_algebra();
        let bad = Matrix::from_ints(Q, &[&[2, 0], &[0, 1]]);
        assert!(matches!(
            canonical_pseudotwistor(&d, &bad, &Matrix::identity(Q, 2)),
            Err(Error::HypothesisFailure(_))
        ));
    }

    fn c2() -> BiHomAlgebra {
        group_algebra(Q, 2).bialgebra.algebra()
    }

    #[test]
    fn flip_gives_ordinary_tensor_product() {
        let a = yau_twist(&c2(), &signed_inversion(Q, 2), &Matrix::identity(Q, 2)).unwrap();
        let b = truncated_polynomials(Q, 2);
        let r = TwistingMap::flip(Q, 2, 2);
        let report = check_twisting_map(&a, &b, &r).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.entry(axiom::R_ELEMENTWISE).is_some());
        assert_eq!(
            twisted_tensor_product(&a, &b, &r).unwrap(),
            tensor_product(&a, &b).unwrap()
        );
    }

    #[test]
    fn sign_flipped_entry_breaks_left_identity() {
        let (a, b) = (c2(), c2());
        let mut r = TwistingMap::flip(Q, 2, 2);
        // R(g⊗1) = −1⊗g sits in column 1·2 + 0 and row 0·2 + 1
        r.r.set(1, 2, s(-1));
        let report = check_twisting_map(&a, &b, &r).unwrap();
        assert!(!report.holds(axiom::R_LEFT));
        assert!(report.entry(axiom::R_LEFT).unwrap().witness.is_some());
        assert!(report.holds(axiom::R_ELEMENTWISE));
        assert!(matches!(
            twisted_tensor_product(&a, &b, &r),
            Err(Error::TwistingMapInvalid(_))
        ));
    }

    /// `b⊗a ↦ χ(a, b) a⊗b` with `χ(g^i, g^j) = (−1)^{ij}`.
    fn sign_bicharacter() -> TwistingMap {
        let mut r = TwistingMap::flip(Q, 2, 2);
        r.r.set(3, 3, s(-1));
        r
    }

    #[test]
    fn lifted_bicharacter_coincides_with_twisted_product() {
        let (a, b) = (c2(), c2());
        let p = sign_bicharacter();
        let classical = twisted_tensor_product(&a, &b, &p).unwrap();
        assert_ne!(classical, tensor_product(&a, &b).unwrap());
        let (sa, id) = (signed_inversion(Q, 2), Matrix::identity(Q, 2));
        let u = lift_twisting_map(&a, &b, &p, &sa, &id, &id, &sa).unwrap();
        let ta = yau_twist(&a, &sa, &id).unwrap();
        let tb = yau_twist(&b, &id, &sa).unwrap();
        assert!(check_twisting_map(&ta, &tb, &u).unwrap().passed());
        let pt = twisted_tensor_pseudotwistor(&ta, &tb, &u).unwrap();
        let d = tensor_product(&ta, &tb).unwrap();
        let report = check_pseudotwistor(&d, &pt).unwrap();
        assert!(report.passed(), "{report}");
        let lifted = twisted_tensor_product(&ta, &tb, &u).unwrap();
        let expected = yau_twist(&classical, &sa.kron(&id), &id.kron(&sa)).unwrap();
        assert_eq!(lifted.mu, expected.mu);
        assert_eq!(lifted.alpha, expected.alpha);
        assert_eq!(lifted.beta, expected.beta);
        assert_eq!(lifted.unit, expected.unit);
        assert!(lifted.unit.is_some());
        let r = check_bihom_algebra(&lifted).unwrap();
        assert!(r.passed() && r.holds(alg_axiom::UNIT_LEFT));
    }

    #[test]
    fn corrupted_classical_map_is_rejected() {
        let (a, b) = (c2(), c2());
        let mut p = sign_bicharacter();
        p.r.set(2, 1, s(-1));
        let id = Matrix::identity(Q, 2);
        let err = lift_twisting_map(&a, &b, &p, &id, &id, &id, &id).unwrap_err();
        let Error::HypothesisFailure(report) = err else {
            panic!("expected hypothesis failure")
        };
        assert!(report.failures().any(|e| e.axiom.starts_with("P")));
    }
}
