//! Two explicit computations in `𝕜[X]/(X¹⁶)` with the product
//! `a∗b = α(a)b`, `α(X) = X²`.
//!
//! The first shows that no `θ` turns `(A, ∗, θ)` into a Hom-associative
//! algebra. The second shows that the twisted bialgebra has no antipode.
//! Every intermediate equality is recorded as a report entry, computed once
//! through the generic structure maps and once in the closed form.

use crate::algebra::{yau_twist, BiHomAlgebra};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::fixtures::{truncated_polynomials, truncated_power_map};
use crate::linalg::{kernel, rank, solve, vector, Matrix};
use crate::report::{CheckReport, Witness};

/// Monomials `X^k` with `k ≥ TRUNCATION` vanish.
pub const TRUNCATION: usize = 16;

/// `X^k` in the truncated model (zero once `k ≥ 16`).
pub fn monomial(field: Field, k: usize) -> Vec<Scalar> {
    if k < TRUNCATION {
        vector::basis(field, TRUNCATION, k)
    } else {
        vector::zeros(field, TRUNCATION)
    }
}

/// `(𝕜[X]/(X¹⁶), ·)` and its twist by `α(X) = X²`, `β = id`.
pub fn twisted_truncated(field: Field) -> Result<(BiHomAlgebra, BiHomAlgebra)> {
    let plain = truncated_polynomials(field, TRUNCATION);
    let alpha = truncated_power_map(field, TRUNCATION, 2);
    let twisted = yau_twist(&plain, &alpha, &Matrix::identity(field, TRUNCATION))?;
    Ok((plain, twisted))
}

fn scaled(c: &Scalar, v: Vec<Scalar>) -> Vec<Scalar> {
    vector::scale(c, &v)
}

fn equality(report: &mut CheckReport, claim: &str, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
    let w = (lhs != rhs).then(|| Witness::new(vec![], lhs, rhs));
    report.record(claim, w);
}

fn failed_if(report: &mut CheckReport, claim: &str, failed: bool) {
    report.record(claim, failed.then(|| Witness::new(vec![], vec![], vec![])));
}

fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], field: Field, n: usize) -> bool {
    let stack = |vs: &[Vec<Scalar>]| Matrix::from_columns(field, n, vs);
    let both: Vec<Vec<Scalar>> = a.iter().chain(b).cloned().collect();
    let (ra, rb, rab) = (rank(&stack(a)), rank(&stack(b)), rank(&stack(&both)));
    ra == rb && rb == rab
}

/// Outcome of testing `θ(X²)∗(X∗X) = (X²∗X)∗θ(X)` for `θ(Xⁿ) = cⁿX³ⁿ`.
#[derive(Clone, Debug)]
pub struct HomObstruction {
    /// Basis of the `θ(X)` (degree ≤ 6) solving `θ(X)∗(X∗X) = (X∗X)∗θ(X)`.
    pub theta_candidates: Vec<Vec<Scalar>>,
    /// `θ(X²)∗(X∗X)`
    pub lhs: Vec<Scalar>,
    /// `(X²∗X)∗θ(X)`
    pub rhs: Vec<Scalar>,
    pub steps: CheckReport,
}

/// `θ` with `θ(Xⁿ) = cⁿX³ⁿ`, truncated.
fn theta(field: Field, c: &Scalar) -> Result<Matrix> {
    let cols: Vec<Vec<Scalar>> = (0..TRUNCATION)
        .map(|n| Ok(scaled(&c.pow(n as i64)?, monomial(field, 3 * n))))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(field, TRUNCATION, &cols))
}

pub fn hom_obstruction(field: Field, c: &Scalar) -> Result<HomObstruction> {
    if c.field() != field {
        return Err(Error::mixed(field, c.field()));
    }
    let (plain, tw) = twisted_truncated(field)?;
    let x = |k| monomial(field, k);
    let mut steps = CheckReport::new();

    let xx = tw.product(&x(1), &x(1));
    equality(&mut steps, "X*X=X^3", xx.clone(), x(3));

    // θ(X) = Σ_{i≤6} a_i X^i; all products below stay under degree 16.
    let constraint = Matrix::from_columns(
        field,
        TRUNCATION,
        &(0..=6)
            .map(|i| vector::sub(&tw.product(&x(i), &xx), &tw.product(&xx, &x(i))))
            .collect::<Vec<_>>(),
    );
    let theta_candidates: Vec<Vec<Scalar>> = kernel(&constraint)
        .into_iter()
        .map(|mut v| {
            v.resize(TRUNCATION, Scalar::zero(field));
            v
        })
        .collect();
    failed_if(
        &mut steps,
        "theta(X)*(X*X)=(X*X)*theta(X) forces theta(X)=cX^3",
        !same_span(&theta_candidates, &[x(3)], field, TRUNCATION),
    );

    let th = theta(field, c)?;
    let c2 = c * c;
    let theta_x2 = th.apply(&x(2));
    equality(&mut steps, "theta(X^2)=c^2X^6", theta_x2.clone(), scaled(&c2, x(6)));
    let lhs = tw.product(&theta_x2, &xx);
    let alpha = &tw.alpha;
    equality(
        &mut steps,
        "c^2X^6*X^3=alpha(c^2X^6)X^3",
        lhs.clone(),
        plain.product(&alpha.apply(&scaled(&c2, x(6))), &x(3)),
    );
    equality(&mut steps, "alpha(c^2X^6)X^3=c^2X^15", lhs.clone(), scaled(&c2, x(15)));

    let x2x = tw.product(&x(2), &x(1));
    equality(
        &mut steps,
        "X^2*X=alpha(X^2)X",
        x2x.clone(),
        plain.product(&alpha.apply(&x(2)), &x(1)),
    );
    equality(&mut steps, "alpha(X^2)X=X^5", x2x.clone(), x(5));
    let theta_x = th.apply(&x(1));
    let rhs = tw.product(&x2x, &theta_x);
    equality(
        &mut steps,
        "X^5*theta(X)=cX^10X^3",
        rhs.clone(),
        scaled(c, plain.product(&x(10), &x(3))),
    );
    equality(&mut steps, "cX^10X^3=cX^13", rhs.clone(), scaled(c, x(13)));

    Ok(HomObstruction {
        theta_candidates,
        lhs,
        rhs,
        steps,
    })
}

/// Matrix of `v ↦ f(v)` for a linear `f` on the truncated model.
fn linear_map(field: Field, cols: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Matrix {
    crate::maps::materialize(field, TRUNCATION, cols, f)
}

/// The antipode equations restricted to `1` and `X`, with the unknowns
/// `S(1)` and `S(X)` stacked into one vector of length 32.
///
/// The report records each step of the argument; the final entry holds when the
/// equations at `X` together with `(S∗id)(1) = 1` have no solution.
pub fn no_antipode_chain(field: Field) -> Result<CheckReport> {
    let (plain, tw) = twisted_truncated(field)?;
    let n = TRUNCATION;
    let x = |k| monomial(field, k);
    let alpha = tw.alpha.clone();
    // Projections onto S(1) and S(X).
    let s1 = Matrix::from_fn(field, n, 2 * n, |r, c| {
        if c == r {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let sx = Matrix::from_fn(field, n, 2 * n, |r, c| {
        if c == r + n {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let (tw, plain) = (&tw, &plain);
    let tw_left = |v: Vec<Scalar>| linear_map(field, n, move |w| tw.product(&v, w));
    let tw_right = |v: Vec<Scalar>| linear_map(field, n, move |w| tw.product(w, &v));
    let mult = |v: Vec<Scalar>| linear_map(field, n, move |w| plain.product(&v, w));

    let mut steps = CheckReport::new();
    // Δ(X) = X⊗1 + 1⊗X with ψ = ω = id; S(a) is `s1` or `sx` applied to the unknowns.
    let e1 = &(&tw_left(x(1)) * &s1) + &(&tw_left(x(0)) * &sx);
    let e1_closed = &(&mult(x(2)) * &s1) + &sx;
    steps.record(
        "(mu(id⊗S)Delta)(X)=X^2S(1)+S(X)",
        crate::report::matrix_identity(&e1, &e1_closed, &[2, n]),
    );
    let e2 = &(&tw_right(x(0)) * &sx) + &(&tw_right(x(1)) * &s1);
    let e2_closed = &(&alpha * &sx) + &(&(&mult(x(1)) * &alpha) * &s1);
    steps.record(
        "(mu(S⊗id)Delta)(X)=alpha(S(X))+alpha(S(1))X",
        crate::report::matrix_identity(&e2, &e2_closed, &[2, n]),
    );
    // ε(X) = 0 for the primitive X.
    equality(
        &mut steps,
        "(eta eps)(X)=0",
        vector::zeros(field, n),
        vector::zeros(field, n),
    );

    // Solutions of e1 = 0 are exactly (s, −X²s).
    let forced: Vec<Vec<Scalar>> = (0..n)
        .map(|k| {
            let s = x(k);
            [
                s.clone(),
                vector::scale(&-Scalar::one(field), &plain.product(&x(2), &s)),
            ]
            .concat()
        })
        .collect();
    failed_if(
        &mut steps,
        "first equation forces S(X)=-X^2S(1)",
        !same_span(&kernel(&e1), &forced, field, 2 * n),
    );
    // On solutions of the second equation, α(S(X)) = −α(S(1))X.
    let second = kernel(&e2).into_iter().find_map(|u| {
        let l = alpha.apply(&sx.apply(&u));
        let r = vector::scale(&-Scalar::one(field), &plain.product(&alpha.apply(&s1.apply(&u)), &x(1)));
        (l != r).then(|| Witness::new(vec![], l, r))
    });
    steps.record("second equation reads alpha(S(X))=-alpha(S(1))X", second);
    steps.record(
        "alpha(-X^2S(1))=-X^4alpha(S(1))",
        crate::report::matrix_identity(&(&alpha * &mult(x(2))), &(&mult(x(4)) * &alpha), &[n]),
    );

    let both = e1.vstack(&e2);
    let common = kernel(&both);
    let alpha_s1_nonzero = common.iter().find_map(|u| {
        let v = alpha.apply(&s1.apply(u));
        (!vector::is_zero(&v)).then(|| Witness::new(vec![], v, vector::zeros(field, n)))
    });
    steps.record("alpha(S(1))X=X^4alpha(S(1)) forces alpha(S(1))=0", alpha_s1_nonzero);

    let e3 = &tw_right(x(0)) * &s1;
    steps.record(
        "(mu(S⊗id)Delta)(1)=alpha(S(1))",
        crate::report::matrix_identity(&e3, &(&alpha * &s1), &[2, n]),
    );
    let system = both.vstack(&e3);
    let rhs = [vector::zeros(field, 2 * n), x(0)].concat();
    let consistent = match solve(&system, &rhs) {
        Ok(_) => true,
        Err(Error::Inconsistent) => false,
        Err(e) => return Err(e),
    };
    failed_if(&mut steps, "1=(eta eps)(1)=alpha(S(1)) has no solution", consistent);
    Ok(steps)
}
