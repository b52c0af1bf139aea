//! The smash product of the twisted quantum plane with the twisted
//! `U_q(sl2)`, evaluated from its definition and in closed form.

use std::collections::BTreeMap;
use std::fmt;

use bihom::exactnum::{q_integer, RationalFunction as Rf};
use bihom::report::{CheckReport, Witness};
use bihom::Scalar;

use crate::error::{QuantumError, Result};
use crate::pbw::{coproduct, uq_multiply, Gen, PBWElement, Pbw};
use crate::qplane::{beta_a_inv, star, twisted_action, QPElement};
use crate::twist::TwistParams;

/// Element of `𝔸 # U`, keyed by `((m, n), FᵃKᵇEᶜ)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SmashElement {
    terms: BTreeMap<((u32, u32), Pbw), Rf>,
}

impl SmashElement {
    pub fn terms(&self) -> impl Iterator<Item = (&((u32, u32), Pbw), &Rf)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: ((u32, u32), Pbw), c: Rf) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Adds `c · a # h`.
    pub fn add_tensor(&mut self, a: &QPElement, h: &PBWElement, c: &Rf) {
        for (ka, ca) in a.terms() {
            for (kh, ch) in h.terms() {
                self.add_term((*ka, *kh), c.mul(ca).mul(ch));
            }
        }
    }

    fn coeff(&self, key: &((u32, u32), Pbw)) -> Rf {
        self.terms.get(key).cloned().unwrap_or_else(Rf::zero)
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(((m, n), h), c)| {
                let term = format!("x^{m}y^{n}#{h}");
                if c.is_one() {
                    term
                } else {
                    format!("({c})*{term}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(a#h)(a'#h') = a ∗ (β⁻¹ω⁻¹(h₁) ▷ β_𝔸⁻¹(a')) # ψ⁻¹(h₂) • h'`
/// with `h₁ ⊗ h₂ = (ω ⊗ ψ)Δ(h)` and `x • y = α(x)β(y)`.
pub fn smash_multiply(
    tp: &TwistParams,
    a: &QPElement,
    h: &PBWElement,
    a2: &QPElement,
    h2: &PBWElement,
) -> Result<SmashElement> {
    let (alpha, beta, psi, omega) = (tp.alpha(), tp.beta(), tp.psi(), tp.omega());
    let (beta_inv, psi_inv, omega_inv) = (beta.inverse(), psi.inverse(), omega.inverse());
    let moved = beta_a_inv(tp, a2);
    let mut out = SmashElement::default();
    for ((d1, d2), c) in coproduct(h).terms() {
        let h1 = omega.apply(&PBWElement::monomial(*d1, Rf::one()));
        let h2_ = psi.apply(&PBWElement::monomial(*d2, Rf::one()));
        let acted = twisted_action(tp, &beta_inv.apply(&omega_inv.apply(&h1)), &moved);
        let left = star(tp, a, &acted)?;
        let right = uq_multiply(&alpha.apply(&psi_inv.apply(&h2_)), &beta.apply(h2));
        out.add_tensor(&left, &right, c);
    }
    Ok(out)
}

/// Left factor `xᵐyⁿ # h` of the closed-form products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftGenerator {
    K,
    Kinv,
    E,
    F,
}

impl LeftGenerator {
    pub const ALL: [LeftGenerator; 4] = [Self::K, Self::Kinv, Self::E, Self::F];

    pub fn gen(self) -> Gen {
        match self {
            Self::K => Gen::K,
            Self::Kinv => Gen::Kinv,
            Self::E => Gen::E,
            Self::F => Gen::F,
        }
    }
}

fn pow(c: &Rf, e: i64) -> Rf {
    c.pow(e).expect("nonzero base")
}

fn q_pow(e: i64) -> Rf {
    pow(&Rf::q(), e)
}

/// The closed form of `(xᵐyⁿ # g)(xʳyˢ # G)`.
pub fn closed_form(
    tp: &TwistParams,
    g: LeftGenerator,
    (m, n, r, s): (u32, u32, u32, u32),
    big_g: &PBWElement,
    bound: usize,
) -> Result<SmashElement> {
    let (xi, l1, l2) = (tp.xi(), tp.lambda(1), tp.lambda(2));
    let (mi, ni, ri, si) = (m as i64, n as i64, r as i64, s as i64);
    let beta_g = tp.beta().apply(big_g);
    let times = |x: Gen| uq_multiply(&PBWElement::generator(x), &beta_g);
    let common = pow(xi, mi + ni + ri + si).mul(&pow(l2, -si));
    let mut out = SmashElement::default();
    let mut push = |coeff: Rf, key: (u32, u32), h: &PBWElement| -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        out.add_tensor(&QPElement::monomial(bound, key.0, key.1, Rf::one())?, h, &coeff);
        Ok(())
    };
    match g {
        LeftGenerator::K | LeftGenerator::Kinv => {
            let sign = if g == LeftGenerator::K { 1 } else { -1 };
            let c = q_pow(sign * ri - sign * si + ni * ri).mul(&common).mul(&pow(l1, -ni));
            push(c, (m + r, n + s), &times(g.gen()))?;
        }
        LeftGenerator::E => {
            let c = q_pow(ni * ri).mul(&common).mul(&pow(l1, 1 - ni));
            push(c, (m + r, n + s), &times(Gen::E))?;
            let c = q_integer(si)
                .mul(&q_pow(ni * (ri + 1)))
                .mul(&common)
                .mul(&pow(l1, 1 - ni));
            if !c.is_zero() {
                push(c, (m + r + 1, n + s - 1), &times(Gen::K))?;
            }
        }
        LeftGenerator::F => {
            let c = q_pow(si - ri + ni * ri).mul(&common).mul(&pow(l1, -ni - 1));
            push(c, (m + r, n + s), &times(Gen::F))?;
            let c = q_integer(ri)
                .mul(&q_pow(ni * (ri - 1)))
                .mul(&common)
                .mul(&pow(l1, -ni - 1));
            if !c.is_zero() {
                push(c, (m + r - 1, n + s + 1), &beta_g)?;
            }
        }
    }
    Ok(out)
}

fn smash_witness(indices: Vec<usize>, a: &SmashElement, b: &SmashElement) -> Option<Witness> {
    let keys = a.terms.keys().chain(b.terms.keys());
    let key = keys.into_iter().find(|k| a.coeff(k) != b.coeff(k))?;
    Some(Witness::new(
        indices,
        vec![Scalar::Function(a.coeff(key))],
        vec![Scalar::Function(b.coeff(key))],
    ))
}

/// Compares the defining product with the closed form for all four left
/// generators at one `(m, n, r, s, G)`.
pub fn verify_smash_formulas(
    (m, n, r, s): (u32, u32, u32, u32),
    big_g: &PBWElement,
    tp: &TwistParams,
    bound: usize,
) -> Result<CheckReport> {
    let degree = (m + n + r + s + 1) as usize;
    if degree >= bound {
        return Err(QuantumError::TruncationOverflow { degree, bound });
    }
    let a = QPElement::monomial(bound, m, n, Rf::one())?;
    let a2 = QPElement::monomial(bound, r, s, Rf::one())?;
    let mut report = CheckReport::new();
    for g in LeftGenerator::ALL {
        let lhs = smash_multiply(tp, &a, &PBWElement::generator(g.gen()), &a2, big_g)?;
        let rhs = closed_form(tp, g, (m, n, r, s), big_g, bound)?;
        let name = format!("(x^{m}y^{n}#{})(x^{r}y^{s}#{big_g})", g.gen().symbol());
        let idx = vec![m as usize, n as usize, r as usize, s as usize];
        report.record(name, smash_witness(idx, &lhs, &rhs));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qplane::DEFAULT_BOUND;
    use bihom::exactnum::Rational;

    fn mono(m: u32, n: u32) -> QPElement {
        QPElement::monomial(DEFAULT_BOUND, m, n, Rf::one()).unwrap()
    }

    #[test]
    fn k_instance() {
        // (x#K)(x#1) = q·x²#K at trivial parameters
        let tp = TwistParams::trivial();
        let got = smash_multiply(
            &tp,
            &mono(1, 0),
            &PBWElement::generator(Gen::K),
            &mono(1, 0),
            &PBWElement::one(),
        )
        .unwrap();
        let mut want = SmashElement::default();
        want.add_tensor(&mono(2, 0), &PBWElement::generator(Gen::K), &Rf::q());
        assert_eq!(got, want);
    }

    #[test]
    fn e_instance() {
        // (1#E)(y#1) = y#E + x#K at trivial parameters
        let tp = TwistParams::trivial();
        let got = smash_multiply(
            &tp,
            &mono(0, 0),
            &PBWElement::generator(Gen::E),
            &mono(0, 1),
            &PBWElement::one(),
        )
        .unwrap();
        let mut want = SmashElement::default();
        want.add_tensor(&mono(0, 1), &PBWElement::generator(Gen::E), &Rf::one());
        want.add_tensor(&mono(1, 0), &PBWElement::generator(Gen::K), &Rf::one());
        assert_eq!(got, want);
    }

    #[test]
    fn formulas_hold_at_distinct_parameters() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let tp = TwistParams::rational([r(2, 1), r(3, 1), r(5, 1), r(7, 1)], r(1, 2)).unwrap();
        for g in [Gen::E, Gen::F, Gen::K] {
            let rep = verify_smash_formulas((1, 2, 2, 1), &PBWElement::generator(g), &tp, DEFAULT_BOUND).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn wrong_closed_form_is_caught() {
        let tp = TwistParams::trivial();
        let a = mono(1, 1);
        let lhs = smash_multiply(&tp, &a, &PBWElement::generator(Gen::E), &a, &PBWElement::one()).unwrap();
        let mut rhs = closed_form(&tp, LeftGenerator::E, (1, 1, 1, 1), &PBWElement::one(), DEFAULT_BOUND).unwrap();
        rhs.add_tensor(&mono(2, 2), &PBWElement::one(), &Rf::one());
        assert!(smash_witness(vec![], &lhs, &rhs).is_some());
    }

    #[test]
    fn overflow_is_reported() {
        let tp = TwistParams::trivial();
        let err = verify_smash_formulas((3, 3, 3, 3), &PBWElement::one(), &tp, DEFAULT_BOUND).unwrap_err();
        assert_eq!(err, QuantumError::TruncationOverflow { degree: 13, bound: 12 });
    }
}
