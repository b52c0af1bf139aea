//! `U_q(sl2)` in the PBW basis `FᵃKᵇEᶜ` over ℚ(q).
//!
//! Two independent normalizers live here. [`normalize_with`] rewrites words
//! with the defining relations oriented towards F-K-E order.
//! [`uq_multiply`] straightens by right multiplication with one generator
//! at a time, using a closed commutation formula for `EᶜF`.

use std::collections::BTreeMap;
use std::fmt;

use bihom::exactnum::{q_integer, RationalFunction as Rf};

/// Algebra generators. `Kinv` is `K⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E,
    F,
    K,
    Kinv,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::E, Gen::F, Gen::K, Gen::Kinv];

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::E => "E",
            Gen::F => "F",
            Gen::K => "K",
            Gen::Kinv => "K^-1",
        }
    }
}

/// Exponents of `FᵃKᵇEᶜ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbw {
    pub f: u32,
    pub k: i32,
    pub e: u32,
}

impl Pbw {
    pub const ONE: Pbw = Pbw { f: 0, k: 0, e: 0 };

    pub fn new(f: u32, k: i32, e: u32) -> Self {
        Pbw { f, k, e }
    }

    pub fn of(g: Gen) -> Self {
        match g {
            Gen::E => Pbw::new(0, 0, 1),
            Gen::F => Pbw::new(1, 0, 0),
            Gen::K => Pbw::new(0, 1, 0),
            Gen::Kinv => Pbw::new(0, -1, 0),
        }
    }

    /// The word `F…F K…K E…E` spelling this monomial.
    pub fn word(self) -> Vec<Gen> {
        let kgen = if self.k >= 0 { Gen::K } else { Gen::Kinv };
        std::iter::repeat_n(Gen::F, self.f as usize)
            .chain(std::iter::repeat_n(kgen, self.k.unsigned_abs() as usize))
            .chain(std::iter::repeat_n(Gen::E, self.e as usize))
            .collect()
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Pbw::ONE {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (sym, exp) in [("F", self.f as i64), ("K", self.k as i64), ("E", self.e as i64)] {
            match exp {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{exp}")),
            }
        }
        write!(f, "{}", parts.join(""))
    }
}

/// Finite sum of PBW monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PBWElement {
    terms: BTreeMap<Pbw, Rf>,
}

impl PBWElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Pbw::ONE, Rf::one())
    }

    pub fn monomial(m: Pbw, c: Rf) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn generator(g: Gen) -> Self {
        Self::monomial(Pbw::of(g), Rf::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pbw, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Pbw) -> Rf {
        self.terms.get(&m).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn add_term(&mut self, m: Pbw, c: Rf) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, rhs: &PBWElement) -> PBWElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &PBWElement) -> PBWElement {
        self.add(&rhs.scale(&Rf::from_i64(-1)))
    }

    pub fn scale(&self, c: &Rf) -> PBWElement {
        let mut out = PBWElement::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v.mul(c));
        }
        out
    }

    /// Applies `f` to each monomial and sums the scaled images.
    pub fn map_terms(&self, mut f: impl FnMut(Pbw) -> PBWElement) -> PBWElement {
        let mut out = PBWElement::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in f(*m).terms {
                out.add_term(m2, c.mul(&c2));
            }
        }
        out
    }

    /// The counit: `ε(FᵃKᵇEᶜ)` is 1 when `a = c = 0`.
    pub fn counit(&self) -> Rf {
        self.terms
            .iter()
            .filter(|(m, _)| m.f == 0 && m.e == 0)
            .fold(Rf::zero(), |acc, (_, c)| acc.add(c))
    }
}

impl fmt::Display for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn q_pow(e: i64) -> Rf {
    Rf::q().pow(e).expect("q is invertible")
}

/// `1/(q - q⁻¹)`
fn h_coeff() -> Rf {
    Rf::one().div(&Rf::q().sub(&q_pow(-1))).expect("q - 1/q is nonzero")
}

/// Which redex the rewriter contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// One rewrite step on the pair `(a, b)`, if it is a redex.
fn rewrite_pair(a: Gen, b: Gen) -> Option<Vec<(Vec<Gen>, Rf)>> {
    use Gen::*;
    let one = Rf::one;
    Some(match (a, b) {
        (E, F) => vec![(vec![F, E], one()), (vec![K], h_coeff()), (vec![Kinv], h_coeff().neg())],
        (E, K) => vec![(vec![K, E], q_pow(-2))],
        (E, Kinv) => vec![(vec![Kinv, E], q_pow(2))],
        (K, F) => vec![(vec![F, K], q_pow(-2))],
        (Kinv, F) => vec![(vec![F, Kinv], q_pow(2))],
        (K, Kinv) | (Kinv, K) => vec![(vec![], one())],
        _ => return None,
    })
}

fn redex(word: &[Gen], strategy: Strategy) -> Option<usize> {
    let is_redex = |i: &usize| rewrite_pair(word[*i], word[*i + 1]).is_some();
    let n = word.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => (0..n).find(is_redex),
        Strategy::Rightmost => (0..n).rev().find(is_redex),
    }
}

fn normal_word(word: &[Gen]) -> Pbw {
    let count = |g: Gen| word.iter().filter(|&&x| x == g).count();
    Pbw::new(
        count(Gen::F) as u32,
        count(Gen::K) as i32 - count(Gen::Kinv) as i32,
        count(Gen::E) as u32,
    )
}

/// Rewrites `word` to normal form, contracting redexes in the given order.
pub fn normalize_with(word: &[Gen], strategy: Strategy) -> PBWElement {
    let mut pending: BTreeMap<Vec<Gen>, Rf> = BTreeMap::new();
    pending.insert(word.to_vec(), Rf::one());
    let mut out = PBWElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = redex(&w, strategy) else {
            out.add_term(normal_word(&w), c);
            continue;
        };
        for (mid, k) in rewrite_pair(w[i], w[i + 1]).expect("redex") {
            let next: Vec<Gen> = w[..i].iter().chain(&mid).chain(&w[i + 2..]).copied().collect();
            let v = c.mul(&k);
            let slot = pending.entry(next).or_insert_with(Rf::zero);
            *slot = slot.add(&v);
        }
    }
    out
}

/// Normal form of a word of generators (leftmost rewriting).
pub fn uq_normalize(word: &[Gen]) -> PBWElement {
    normalize_with(word, Strategy::Leftmost)
}

/// `FᵃKᵇEᶜ · g` in normal form.
fn times_generator(m: Pbw, g: Gen) -> PBWElement {
    match g {
        Gen::E => PBWElement::monomial(Pbw::new(m.f, m.k, m.e + 1), Rf::one()),
        // EᶜK^{±1} = q^{∓2c}K^{±1}Eᶜ
        Gen::K => PBWElement::monomial(Pbw::new(m.f, m.k + 1, m.e), q_pow(-2 * m.e as i64)),
        Gen::Kinv => PBWElement::monomial(Pbw::new(m.f, m.k - 1, m.e), q_pow(2 * m.e as i64)),
        Gen::F => {
            // EᶜF = FEᶜ + [c](q^{1-c}K - q^{c-1}K⁻¹)/(q - q⁻¹) E^{c-1}, and KᵇF = q^{-2b}FKᵇ.
            let c = m.e as i64;
            let mut out = PBWElement::monomial(Pbw::new(m.f + 1, m.k, m.e), q_pow(-2 * m.k as i64));
            if c > 0 {
                let scale = q_integer(c).mul(&h_coeff());
                out.add_term(Pbw::new(m.f, m.k + 1, m.e - 1), scale.mul(&q_pow(1 - c)));
                out.add_term(Pbw::new(m.f, m.k - 1, m.e - 1), scale.mul(&q_pow(c - 1)).neg());
            }
            out
        }
    }
}

/// The product in `U_q(sl2)`.
pub fn uq_multiply(x: &PBWElement, y: &PBWElement) -> PBWElement {
    let mut out = PBWElement::zero();
    for (my, cy) in y.terms() {
        let mut acc = x.scale(cy);
        for g in my.word() {
            acc = acc.map_terms(|m| times_generator(m, g));
        }
        out = out.add(&acc);
    }
    out
}

/// Normal form of a word computed by straightening, independent of the rewriter.
pub fn straighten(word: &[Gen]) -> PBWElement {
    word.iter()
        .fold(PBWElement::one(), |acc, &g| acc.map_terms(|m| times_generator(m, g)))
}

/// Element of `U ⊗ U`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PBWTensor {
    terms: BTreeMap<(Pbw, Pbw), Rf>,
}

impl PBWTensor {
    pub fn terms(&self) -> impl Iterator<Item = (&(Pbw, Pbw), &Rf)> {
        self.terms.iter()
    }

    fn add_term(&mut self, k: (Pbw, Pbw), c: Rf) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    /// Componentwise product in `U ⊗ U`.
    pub fn mul(&self, rhs: &PBWTensor) -> PBWTensor {
        let mut out = PBWTensor::default();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &rhs.terms {
                let c = ca.mul(cb);
                let left = uq_multiply(
                    &PBWElement::monomial(*a1, Rf::one()),
                    &PBWElement::monomial(*b1, Rf::one()),
                );
                let right = uq_multiply(
                    &PBWElement::monomial(*a2, Rf::one()),
                    &PBWElement::monomial(*b2, Rf::one()),
                );
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term((*l, *r), c.mul(cl).mul(cr));
                    }
                }
            }
        }
        out
    }
}

fn generator_coproduct(g: Gen) -> PBWTensor {
    let mut t = PBWTensor::default();
    let p = Pbw::of;
    match g {
        Gen::E => {
            t.add_term((Pbw::ONE, p(Gen::E)), Rf::one());
            t.add_term((p(Gen::E), p(Gen::K)), Rf::one());
        }
        Gen::F => {
            t.add_term((p(Gen::Kinv), p(Gen::F)), Rf::one());
            t.add_term((p(Gen::F), Pbw::ONE), Rf::one());
        }
        Gen::K | Gen::Kinv => t.add_term((p(g), p(g)), Rf::one()),
    }
    t
}

/// The coproduct, extended multiplicatively from the generators.
pub fn coproduct(x: &PBWElement) -> PBWTensor {
    let mut out = PBWTensor::default();
    for (m, c) in x.terms() {
        let mut acc = PBWTensor::default();
        acc.add_term((Pbw::ONE, Pbw::ONE), c.clone());
        for g in m.word() {
            acc = acc.mul(&generator_coproduct(g));
        }
        for (k, v) in acc.terms {
            out.add_term(k, v);
        }
    }
    out
}

/// Every word of length `len` over the four generators.
pub fn words(len: usize) -> Vec<Vec<Gen>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                Gen::ALL.into_iter().map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    fn q(e: i64) -> Rf {
        q_pow(e)
    }

    #[test]
    fn defining_relations() {
        // KE is already normal; the relation shows up as KE = q²·EK.
        assert_eq!(
            uq_normalize(&[K, E]),
            PBWElement::monomial(Pbw::new(0, 1, 1), Rf::one())
        );
        assert_eq!(uq_normalize(&[K, E]), uq_normalize(&[E, K]).scale(&q(2)));
        assert_eq!(uq_normalize(&[K, F]), uq_normalize(&[F, K]).scale(&q(-2)));
        assert_eq!(uq_normalize(&[K, Kinv]), PBWElement::one());
        assert_eq!(uq_normalize(&[Kinv, K]), PBWElement::one());
        let ef = uq_normalize(&[E, F]);
        assert_eq!(ef.coeff(Pbw::new(1, 0, 1)), Rf::one());
        assert_eq!(ef.coeff(Pbw::new(0, 1, 0)), h_coeff());
        assert_eq!(ef.coeff(Pbw::new(0, -1, 0)), h_coeff().neg());
        assert_eq!(ef.terms().count(), 3);
        let kf = uq_multiply(&PBWElement::generator(K), &PBWElement::generator(F));
        assert_eq!(kf, PBWElement::monomial(Pbw::new(1, 1, 0), q(-2)));
    }

    #[test]
    fn unit_and_associativity() {
        let x = uq_normalize(&[E, E, F, K]);
        assert_eq!(uq_multiply(&PBWElement::one(), &x), x);
        assert_eq!(uq_multiply(&x, &PBWElement::one()), x);
        let (e, f, k) = (
            PBWElement::generator(E),
            PBWElement::generator(F),
            PBWElement::generator(K),
        );
        assert_eq!(
            uq_multiply(&uq_multiply(&e, &f), &k),
            uq_multiply(&e, &uq_multiply(&f, &k))
        );
    }

    #[test]
    fn rewriting_matches_straightening_on_short_words() {
        for len in 0..=4 {
            for w in words(len) {
                let r = uq_normalize(&w);
                assert_eq!(r, normalize_with(&w, Strategy::Rightmost), "{w:?}");
                assert_eq!(r, straighten(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let x = uq_normalize(&[E, F]);
        let y = uq_normalize(&[K, E, F]);
        assert_eq!(coproduct(&uq_multiply(&x, &y)), coproduct(&x).mul(&coproduct(&y)));
        // Δ(KE) = K⊗KE + KE⊗K²
        assert_eq!(coproduct(&uq_normalize(&[K, E])).terms().count(), 2);
        assert_eq!(uq_normalize(&[E]).counit(), Rf::zero());
        assert_eq!(uq_normalize(&[K, Kinv, K]).counit(), Rf::one());
    }
}
