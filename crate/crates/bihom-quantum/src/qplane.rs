//! The quantum plane `k⟨x,y⟩/(yx - qxy)` truncated by total degree, its
//! `U_q(sl2)`-action and the Yau twist by `α_𝔸, β_𝔸`.
//!
//! [`classical_action`] is derived from the action on `x, y` and the
//! coproduct alone. [`qplane_action`] is the closed form of the twisted
//! action on generators; the two are compared in tests and in
//! [`crate::verify::verify_action_grid`].

use std::collections::BTreeMap;
use std::fmt;

use bihom::exactnum::{q_integer, RationalFunction as Rf};

use crate::error::{QuantumError, Result};
use crate::pbw::{coproduct, Gen, PBWElement, Pbw};
use crate::twist::TwistParams;

/// Default bound on total degree.
pub const DEFAULT_BOUND: usize = 12;

/// Finite sum of monomials `xᵐyⁿ` with `m + n < bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPElement {
    bound: usize,
    terms: BTreeMap<(u32, u32), Rf>,
}

impl QPElement {
    pub fn zero(bound: usize) -> Self {
        QPElement {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(bound, 0, 0, Rf::one()).expect("bound is positive")
    }

    pub fn monomial(bound: usize, m: u32, n: u32, c: Rf) -> Result<Self> {
        let mut p = Self::zero(bound);
        p.add_term((m, n), c)?;
        Ok(p)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Rf {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|(m, n)| (m + n) as usize).max()
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Rf) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let degree = (key.0 + key.1) as usize;
        if degree >= self.bound {
            return Err(QuantumError::TruncationOverflow {
                degree,
                bound: self.bound,
            });
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &QPElement) -> QPElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone()).expect("same bound");
        }
        out
    }

    pub fn scale(&self, c: &Rf) -> QPElement {
        self.map_diagonal(|_, _| c.clone())
    }

    /// Scales `xᵐyⁿ` by `f(m, n)`.
    pub fn map_diagonal(&self, f: impl Fn(u32, u32) -> Rf) -> QPElement {
        let mut out = QPElement::zero(self.bound);
        for ((m, n), c) in &self.terms {
            out.add_term((*m, *n), c.mul(&f(*m, *n))).expect("degree preserved");
        }
        out
    }
}

impl fmt::Display for QPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, n), c)| format!("({c})*x^{m}y^{n}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn pow(c: &Rf, e: i64) -> Rf {
    c.pow(e).expect("nonzero base")
}

fn q_pow(e: i64) -> Rf {
    pow(&Rf::q(), e)
}

/// The untwisted product, using `yⁿxʳ = q^{nr}xʳyⁿ`.
pub fn classical_multiply(a: &QPElement, b: &QPElement) -> Result<QPElement> {
    let mut out = QPElement::zero(a.bound.min(b.bound));
    for ((m, n), ca) in &a.terms {
        for ((r, s), cb) in &b.terms {
            let c = ca.mul(cb).mul(&q_pow((*n as i64) * (*r as i64)));
            out.add_term((m + r, n + s), c)?;
        }
    }
    Ok(out)
}

/// `α_𝔸`: `x ↦ ξx`, `y ↦ ξλ₁⁻¹y`.
pub fn alpha_a(tp: &TwistParams, p: &QPElement) -> QPElement {
    let (xi, l1) = (tp.xi(), tp.lambda(1));
    p.map_diagonal(|m, n| pow(xi, (m + n) as i64).mul(&pow(l1, -(n as i64))))
}

/// `β_𝔸`: `x ↦ ξx`, `y ↦ ξλ₂⁻¹y`.
pub fn beta_a(tp: &TwistParams, p: &QPElement) -> QPElement {
    let (xi, l2) = (tp.xi(), tp.lambda(2));
    p.map_diagonal(|m, n| pow(xi, (m + n) as i64).mul(&pow(l2, -(n as i64))))
}

pub fn beta_a_inv(tp: &TwistParams, p: &QPElement) -> QPElement {
    let (xi, l2) = (tp.xi(), tp.lambda(2));
    p.map_diagonal(|m, n| pow(xi, -((m + n) as i64)).mul(&pow(l2, n as i64)))
}

/// The twisted product `a ∗ b = α_𝔸(a)β_𝔸(b)`.
pub fn star(tp: &TwistParams, a: &QPElement, b: &QPElement) -> Result<QPElement> {
    classical_multiply(&alpha_a(tp, a), &beta_a(tp, b))
}

/// `FᵃKᵇEᶜ` on `span{x, y}`, from `E: y ↦ x`, `F: x ↦ y`, `K: x ↦ qx, y ↦ q⁻¹y`.
fn act_on_letter(m: Pbw, cx: Rf, cy: Rf) -> (Rf, Rf) {
    let (mut cx, mut cy) = (cx, cy);
    for _ in 0..m.e {
        (cx, cy) = (cy, Rf::zero());
    }
    cx = cx.mul(&q_pow(m.k as i64));
    cy = cy.mul(&q_pow(-(m.k as i64)));
    for _ in 0..m.f {
        (cx, cy) = (Rf::zero(), cx);
    }
    (cx, cy)
}

fn act_monomial(h: Pbw, m: u32, n: u32, bound: usize) -> QPElement {
    if m + n == 0 {
        return QPElement::one(bound).scale(&PBWElement::monomial(h, Rf::one()).counit());
    }
    let letter = |x: bool| {
        let (cx, cy) = if x {
            (Rf::one(), Rf::zero())
        } else {
            (Rf::zero(), Rf::one())
        };
        let (cx, cy) = act_on_letter(h, cx, cy);
        let mut p = QPElement::zero(bound);
        p.add_term((1, 0), cx).expect("degree 1");
        p.add_term((0, 1), cy).expect("degree 1");
        p
    };
    if m + n == 1 {
        return letter(m == 1);
    }
    // h·(uv) = Σ (h₁·u)(h₂·v) with u the first letter of xᵐyⁿ.
    let (first_x, rest) = if m > 0 { (true, (m - 1, n)) } else { (false, (0, n - 1)) };
    let mut out = QPElement::zero(bound);
    for ((h1, h2), c) in coproduct(&PBWElement::monomial(h, Rf::one())).terms() {
        let u = act_monomial(*h1, u32::from(first_x), u32::from(!first_x), bound);
        let v = act_monomial(*h2, rest.0, rest.1, bound);
        let uv = classical_multiply(&u, &v).expect("action preserves degree");
        out = out.add(&uv.scale(c));
    }
    out
}

/// The untwisted action `h·a` of `U_q(sl2)` on the quantum plane.
pub fn classical_action(h: &PBWElement, p: &QPElement) -> QPElement {
    let mut out = QPElement::zero(p.bound);
    for (hm, hc) in h.terms() {
        for ((m, n), pc) in p.terms() {
            out = out.add(&act_monomial(*hm, *m, *n, p.bound).scale(&hc.mul(pc)));
        }
    }
    out
}

/// The twisted action `h ▷ a = α(h)·β_𝔸(a)`.
pub fn twisted_action(tp: &TwistParams, h: &PBWElement, p: &QPElement) -> QPElement {
    classical_action(&tp.alpha().apply(h), &beta_a(tp, p))
}

/// The twisted action of a generator in closed form:
/// `E: xᵐyⁿ ↦ [n]ξ^{m+n}λ₁λ₂⁻ⁿx^{m+1}y^{n-1}`,
/// `F: xᵐyⁿ ↦ [m]ξ^{m+n}λ₁⁻¹λ₂⁻ⁿx^{m-1}y^{n+1}`,
/// `K^{±1}: P(x,y) ↦ P(q^{±1}ξx, q^{∓1}ξλ₂⁻¹y)`.
pub fn qplane_action(gen: Gen, p: &QPElement, tp: &TwistParams) -> QPElement {
    let (xi, l1, l2) = (tp.xi(), tp.lambda(1), tp.lambda(2));
    let mut out = QPElement::zero(p.bound);
    for ((m, n), c) in p.terms() {
        let (m, n) = (*m, *n);
        let base = c.mul(&pow(xi, (m + n) as i64)).mul(&pow(l2, -(n as i64)));
        let (key, k) = match gen {
            Gen::E if n > 0 => ((m + 1, n - 1), q_integer(n as i64).mul(l1)),
            Gen::F if m > 0 => ((m - 1, n + 1), q_integer(m as i64).mul(&pow(l1, -1))),
            Gen::E | Gen::F => continue,
            Gen::K => ((m, n), q_pow(m as i64 - n as i64)),
            Gen::Kinv => ((m, n), q_pow(n as i64 - m as i64)),
        };
        out.add_term(key, base.mul(&k)).expect("degree preserved");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bihom::exactnum::Rational;

    fn params() -> TwistParams {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        TwistParams::rational([r(2, 1), r(3, 1), r(5, 1), r(7, 1)], r(1, 2)).unwrap()
    }

    fn mono(m: u32, n: u32) -> QPElement {
        QPElement::monomial(DEFAULT_BOUND, m, n, Rf::one()).unwrap()
    }

    fn c(n: i64, d: i64) -> Rf {
        Rf::constant(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn plane_relation_and_overflow() {
        let yx = classical_multiply(&mono(0, 1), &mono(1, 0)).unwrap();
        assert_eq!(yx, mono(1, 1).scale(&Rf::q()));
        let big = mono(6, 0);
        assert_eq!(
            classical_multiply(&big, &big).unwrap_err(),
            QuantumError::TruncationOverflow { degree: 12, bound: 12 }
        );
    }

    #[test]
    fn classical_action_is_the_standard_one() {
        let one = PBWElement::one();
        let e = PBWElement::generator(Gen::E);
        let f = PBWElement::generator(Gen::F);
        let k = PBWElement::generator(Gen::K);
        for m in 0..4u32 {
            for n in 0..4u32 {
                let p = mono(m, n);
                assert_eq!(classical_action(&one, &p), p);
                let ep = if n > 0 {
                    mono(m + 1, n - 1).scale(&q_integer(n as i64))
                } else {
                    QPElement::zero(DEFAULT_BOUND)
                };
                assert_eq!(classical_action(&e, &p), ep, "E on x^{m}y^{n}");
                let fp = if m > 0 {
                    mono(m - 1, n + 1).scale(&q_integer(m as i64))
                } else {
                    QPElement::zero(DEFAULT_BOUND)
                };
                assert_eq!(classical_action(&f, &p), fp, "F on x^{m}y^{n}");
                assert_eq!(classical_action(&k, &p), p.scale(&q_pow(m as i64 - n as i64)));
            }
        }
    }

    #[test]
    fn action_examples() {
        let one = TwistParams::trivial();
        let tp = params();
        let xi2 = c(1, 4);
        // E on xy: ξ²λ₁λ₂⁻¹x²
        assert_eq!(
            qplane_action(Gen::E, &mono(1, 1), &tp),
            mono(2, 0).scale(&xi2.mul(&c(2, 3)))
        );
        assert!(qplane_action(Gen::F, &mono(0, 2), &tp).is_zero());
        // K on x²y: qξ³λ₂⁻¹x²y
        assert_eq!(
            qplane_action(Gen::K, &mono(2, 1), &tp),
            mono(2, 1).scale(&Rf::q().mul(&c(1, 8)).mul(&c(1, 3)))
        );
        assert_eq!(qplane_action(Gen::K, &mono(1, 0), &one), mono(1, 0).scale(&Rf::q()));
    }

    #[test]
    fn closed_form_matches_twisted_action() {
        let tp = params();
        for g in Gen::ALL {
            for m in 0..5u32 {
                for n in 0..5u32 {
                    let p = mono(m, n);
                    assert_eq!(
                        qplane_action(g, &p, &tp),
                        twisted_action(&tp, &PBWElement::generator(g), &p),
                        "{g:?} on x^{m}y^{n}"
                    );
                }
            }
        }
    }
}
