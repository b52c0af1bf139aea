//! The scaling automorphisms `E ↦ λE, F ↦ λ⁻¹F, K^{±1} ↦ K^{±1}` and the
//! parameters of the twisted quantum group and quantum plane.

use bihom::exactnum::{Rational, RationalFunction as Rf};
use bihom::report::{CheckReport, Witness};
use bihom::Scalar;

use crate::error::{QuantumError, Result};
use crate::pbw::{uq_multiply, uq_normalize, Gen, PBWElement, Pbw};

/// Generator-level map scaling `E` by `λ` and `F` by `λ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaling {
    lambda: Rf,
}

/// Builds the scaling endomorphism for a nonzero `λ`.
pub fn uq_twist_endomorphism(lambda: Rf) -> Result<Scaling> {
    if lambda.is_zero() {
        return Err(QuantumError::ZeroParameter("lambda"));
    }
    Ok(Scaling { lambda })
}

impl Scaling {
    pub fn lambda(&self) -> &Rf {
        &self.lambda
    }

    pub fn inverse(&self) -> Scaling {
        Scaling {
            lambda: self.lambda.inv().expect("nonzero by construction"),
        }
    }

    fn power(&self, e: i64) -> Rf {
        self.lambda.pow(e).expect("nonzero by construction")
    }

    pub fn generator_image(&self, g: Gen) -> PBWElement {
        let c = match g {
            Gen::E => self.power(1),
            Gen::F => self.power(-1),
            Gen::K | Gen::Kinv => Rf::one(),
        };
        PBWElement::generator(g).scale(&c)
    }

    /// `FᵃKᵇEᶜ ↦ λ^{c-a} FᵃKᵇEᶜ`
    pub fn apply(&self, x: &PBWElement) -> PBWElement {
        x.map_terms(|m| PBWElement::monomial(m, self.power(m.e as i64 - m.f as i64)))
    }

    /// Image of a word, multiplying the generator images in order.
    pub fn apply_word(&self, word: &[Gen]) -> PBWElement {
        word.iter()
            .fold(PBWElement::one(), |acc, &g| uq_multiply(&acc, &self.generator_image(g)))
    }

    /// The multiplicative extension evaluated on the PBW word of each term.
    pub fn apply_multiplicative(&self, x: &PBWElement) -> PBWElement {
        x.map_terms(|m: Pbw| self.apply_word(&m.word()))
    }

    /// Checks that the generator images satisfy the defining relations.
    pub fn check_relations(&self) -> CheckReport {
        use Gen::*;
        let mut report = CheckReport::new();
        let q2 = Rf::q().pow(2).expect("q is invertible");
        let hq = Rf::one()
            .div(&Rf::q().sub(&Rf::q().inv().expect("q is invertible")))
            .expect("q - 1/q is nonzero");
        let image = |w: &[Gen]| self.apply_word(w);
        let cases: Vec<(&str, PBWElement, PBWElement)> = vec![
            ("KK^-1=1", image(&[K, Kinv]), PBWElement::one()),
            ("K^-1K=1", image(&[Kinv, K]), PBWElement::one()),
            ("KE=q^2EK", image(&[K, E]), image(&[E, K]).scale(&q2)),
            (
                "KF=q^-2FK",
                image(&[K, F]),
                image(&[F, K]).scale(&q2.inv().expect("nonzero")),
            ),
            (
                "EF-FE=(K-K^-1)/(q-q^-1)",
                image(&[E, F]).sub(&image(&[F, E])),
                image(&[K]).sub(&image(&[Kinv])).scale(&hq),
            ),
        ];
        for (name, lhs, rhs) in cases {
            report.record(name, pbw_witness(&lhs, &rhs));
        }
        // The word-level extension must match the closed PBW scaling.
        let sample = uq_normalize(&[E, F, K, E, Kinv, F]);
        report.record(
            "multiplicative extension agrees with PBW scaling",
            pbw_witness(&self.apply(&sample), &self.apply_multiplicative(&sample)),
        );
        report
    }
}

/// First PBW monomial where `a` and `b` differ, with both coefficients.
pub fn pbw_witness(a: &PBWElement, b: &PBWElement) -> Option<Witness> {
    let diff = a.sub(b);
    let (m, _) = diff.terms().next()?;
    Some(Witness::new(
        vec![m.f as usize, m.k.unsigned_abs() as usize, m.e as usize],
        vec![Scalar::Function(a.coeff(*m))],
        vec![Scalar::Function(b.coeff(*m))],
    ))
}

/// `λ₁…λ₄` scale `α, β, ψ, ω`; `ξ` scales the quantum plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistParams {
    lambda: [Rf; 4],
    xi: Rf,
}

impl TwistParams {
    pub fn new(lambda: [Rf; 4], xi: Rf) -> Result<Self> {
        const NAMES: [&str; 4] = ["lambda1", "lambda2", "lambda3", "lambda4"];
        if let Some(i) = lambda.iter().position(Rf::is_zero) {
            return Err(QuantumError::ZeroParameter(NAMES[i]));
        }
        if xi.is_zero() {
            return Err(QuantumError::ZeroParameter("xi"));
        }
        Ok(TwistParams { lambda, xi })
    }

    pub fn rational(lambda: [Rational; 4], xi: Rational) -> Result<Self> {
        Self::new(lambda.map(Rf::constant), Rf::constant(xi))
    }

    /// All parameters equal to 1.
    pub fn trivial() -> Self {
        Self::new([Rf::one(), Rf::one(), Rf::one(), Rf::one()], Rf::one()).expect("nonzero")
    }

    /// `λᵢ` for `i ∈ 1..=4`.
    pub fn lambda(&self, i: usize) -> &Rf {
        &self.lambda[i - 1]
    }

    pub fn xi(&self) -> &Rf {
        &self.xi
    }

    fn scaling(&self, i: usize) -> Scaling {
        Scaling {
            lambda: self.lambda[i - 1].clone(),
        }
    }

    pub fn alpha(&self) -> Scaling {
        self.scaling(1)
    }

    pub fn beta(&self) -> Scaling {
        self.scaling(2)
    }

    pub fn psi(&self) -> Scaling {
        self.scaling(3)
    }

    pub fn omega(&self) -> Scaling {
        self.scaling(4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(
            uq_twist_endomorphism(Rf::zero()).unwrap_err(),
            QuantumError::ZeroParameter("lambda")
        );
        let err = TwistParams::rational([r(1, 1), r(0, 1), r(1, 1), r(1, 1)], r(1, 1)).unwrap_err();
        assert_eq!(err, QuantumError::ZeroParameter("lambda2"));
    }

    #[test]
    fn identity_at_one() {
        let s = uq_twist_endomorphism(Rf::one()).unwrap();
        let x = uq_normalize(&[E, F, K, E]);
        assert_eq!(s.apply(&x), x);
    }

    #[test]
    fn relations_preserved() {
        let s = uq_twist_endomorphism(Rf::constant(r(5, 3))).unwrap();
        let rep = s.check_relations();
        assert!(rep.passed(), "{rep}");
        // EF - FE is fixed because λλ⁻¹ = 1.
        let c = uq_normalize(&[E, F]).sub(&uq_normalize(&[F, E]));
        assert_eq!(s.apply(&c), c);
        assert_eq!(s.inverse().apply(&s.apply(&c)), c);
        let ke = s.apply(&uq_normalize(&[K, E]));
        let ek = s.apply(&uq_normalize(&[E, K]));
        assert_eq!(ke, ek.scale(&Rf::q().pow(2).unwrap()));
    }
}
