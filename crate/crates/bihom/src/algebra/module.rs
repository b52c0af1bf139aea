use crate::error::{Error, Result};
use crate::linalg::{Bilinear, Matrix, Tensor3};
use crate::maps::{commute_witness, multiplicative_witness, require_square};
use crate::report::{first_failure, tuples, CheckReport};

use super::{yau_twist, BiHomAlgebra};

/// A left module `(M, α_M, β_M)`; `action[i][j][k]` is the `m_k` coefficient of `e_i · m_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub action: Tensor3,
    pub alpha: Matrix,
    pub beta: Matrix,
}

impl LeftModule {
    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &BiHomAlgebra) -> Self {
        LeftModule {
            action: a.mu.clone(),
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
        }
    }

    fn validate(&self, a: &BiHomAlgebra) -> Result<()> {
        let m = self.dim();
        if self.action.dims() != (a.dim(), m, m) {
            return Err(Error::shape(format!(
                "action tensor has shape {:?}, expected ({}, {m}, {m})",
                self.action.dims(),
                a.dim()
            )));
        }
        require_square("alpha_M", &self.alpha, m, a.field())?;
        require_square("beta_M", &self.beta, m, a.field())
    }
}

pub mod axiom {
    pub const COMMUTE: &str = "module:commute(alphaM,betaM)";
    pub const ALPHA: &str = "module:alphaM(a.m)=alpha(a).alphaM(m)";
    pub const BETA: &str = "module:betaM(a.m)=beta(a).betaM(m)";
    pub const ASSOCIATIVITY: &str = "module:alpha(a).(b.m)=(ab).betaM(m)";
    pub const UNITAL: &str = "module:1.m=betaM(m)";
}

/// Checks the left-module axioms, plus unitality when `A` has a unit.
pub fn check_module(a: &BiHomAlgebra, module: &LeftModule) -> Result<CheckReport> {
    a.validate()?;
    module.validate(a)?;
    let (d, m) = (a.dim(), module.dim());
    let act = Bilinear::new(&module.action);
    let prod = Bilinear::new(&a.mu);
    let mcol = |x: &Matrix, j: usize| x.column(j);
    let mut report = CheckReport::new();
    report.record(axiom::COMMUTE, commute_witness(&module.alpha, &module.beta));
    for (name, am, mm) in [
        (axiom::ALPHA, &a.alpha, &module.alpha),
        (axiom::BETA, &a.beta, &module.beta),
    ] {
        report.record(
            name,
            first_failure(tuples(&[d, m]), |t| {
                let lhs = mm.apply(&act.basis(t[0], t[1]));
                let rhs = act.apply(&am.column(t[0]), &mcol(mm, t[1]));
                (lhs, rhs)
            }),
        );
    }
    let field = a.field();
    let e = |n: usize, i: usize| crate::linalg::vector::basis(field, n, i);
    report.record(
        axiom::ASSOCIATIVITY,
        first_failure(tuples(&[d, d, m]), |t| {
            let lhs = act.apply(&a.alpha.column(t[0]), &act.basis(t[1], t[2]));
            let rhs = act.apply(&prod.basis(t[0], t[1]), &mcol(&module.beta, t[2]));
            (lhs, rhs)
        }),
    );
    if let Some(u) = &a.unit {
        report.record(
            axiom::UNITAL,
            first_failure(tuples(&[m]), |t| (act.apply(u, &e(m, t[0])), mcol(&module.beta, t[0]))),
        );
    }
    Ok(report)
}

/// Turns a module over an associative algebra into a module over
/// `A_(α_A, β_A)` with `a ▷ m = α_A(a) · β_M(m)`.
///
/// Returns the twisted algebra and the new module.
pub fn twist_left_module(
    a: &BiHomAlgebra,
    action: &Tensor3,
    alpha_a: &Matrix,
    beta_a: &Matrix,
    alpha_m: &Matrix,
    beta_m: &Matrix,
) -> Result<(BiHomAlgebra, LeftModule)> {
    a.validate()?;
    let (d, f) = (a.dim(), a.field());
    require_square("alpha_A", alpha_a, d, f)?;
    require_square("beta_A", beta_a, d, f)?;
    let plain = LeftModule {
        action: action.clone(),
        alpha: alpha_m.clone(),
        beta: beta_m.clone(),
    };
    plain.validate(a)?;
    let m = plain.dim();

    let mut hyp = CheckReport::new();
    let prod = Bilinear::new(&a.mu);
    let act = Bilinear::new(action);
    hyp.record(
        "associative",
        first_failure(tuples(&[d, d, d]), |t| {
            let lhs = prod.apply(&a.basis(t[0]), &prod.basis(t[1], t[2]));
            let rhs = prod.apply(&prod.basis(t[0], t[1]), &a.basis(t[2]));
            (lhs, rhs)
        }),
    );
    hyp.record(
        "module",
        first_failure(tuples(&[d, d, m]), |t| {
            let lhs = act.apply(&a.basis(t[0]), &act.basis(t[1], t[2]));
            let rhs = act.apply(&prod.basis(t[0], t[1]), &crate::linalg::vector::basis(f, m, t[2]));
            (lhs, rhs)
        }),
    );
    hyp.record("multiplicative(alpha_A)", multiplicative_witness(&a.mu, alpha_a));
    hyp.record("multiplicative(beta_A)", multiplicative_witness(&a.mu, beta_a));
    hyp.record("commute(alpha_A,beta_A)", commute_witness(alpha_a, beta_a));
    let equivariance = {
        let identity = a.rebuild(a.mu.clone(), alpha_a.clone(), beta_a.clone(), None);
        check_module(&identity, &plain)?
    };
    for name in [axiom::COMMUTE, axiom::ALPHA, axiom::BETA] {
        let entry = equivariance.entry(name).expect("recorded");
        hyp.record(name, entry.witness.clone());
    }
    if !hyp.passed() {
        return Err(Error::HypothesisFailure(Box::new(hyp)));
    }

    let id = Matrix::identity(f, d);
    let base = a.rebuild(a.mu.clone(), id.clone(), id, a.unit.clone());
    let twisted = yau_twist(&base, alpha_a, beta_a)?;
    let module = LeftModule {
        action: crate::maps::precompose(action, alpha_a, beta_m),
        alpha: alpha_m.clone(),
        beta: beta_m.clone(),
    };
    Ok((twisted, module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_bihom_algebra, endomorphism_algebra, example_family, Family};
    use crate::exactnum::{Field, Scalar};

    const Q: Field = Field::Rational;

    #[test]
    fn regular_module_of_family_one() {
        let a = example_family(Family::First, &Scalar::from_i64(Q, 3), &Scalar::from_i64(Q, 2)).unwrap();
        assert!(check_module(&a, &LeftModule::regular(&a)).unwrap().passed());
    }

    #[test]
    fn twisted_regular_module_of_matrices() {
        let m2 = endomorphism_algebra(&Matrix::identity(Q, 2), &Matrix::identity(Q, 2)).unwrap();
        // Conjugation by diag(1, 2) is an automorphism.
        let u = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let conj = endomorphism_algebra(&u, &Matrix::identity(Q, 2)).unwrap().alpha;
        let id = Matrix::identity(Q, 4);
        let (tw, module) = twist_left_module(&m2, &m2.mu, &conj, &id, &conj, &id).unwrap();
        assert!(check_bihom_algebra(&tw).unwrap().passed());
        assert!(check_module(&tw, &module).unwrap().passed());
    }

    #[test]
    fn non_equivariant_maps_are_rejected() {
        let m2 = endomorphism_algebra(&Matrix::identity(Q, 2), &Matrix::identity(Q, 2)).unwrap();
        let id = Matrix::identity(Q, 4);
        let mut bad = Matrix::identity(Q, 4);
        bad.set(0, 1, Scalar::one(Q));
        let err = twist_left_module(&m2, &m2.mu, &id, &id, &bad, &id).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailure(_)));
    }

    #[test]
    fn zero_action_on_nonunital_algebra() {
        let a = BiHomAlgebra::associative(Tensor3::zeros(Q, 2, 2, 2), None).unwrap();
        let module = LeftModule {
            action: Tensor3::zeros(Q, 2, 3, 3),
            alpha: Matrix::identity(Q, 3),
            beta: Matrix::identity(Q, 3),
        };
        assert!(check_module(&a, &module).unwrap().passed());
    }
}
