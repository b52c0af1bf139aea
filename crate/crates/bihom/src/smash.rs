//! Smash products of module algebras with BiHom-bialgebras, the twisting
//! maps behind them, and the dual module algebra `H*`.

use crate::algebra::{tensor_product, BiHomAlgebra};
use crate::bialgebra::{check_module_bihom_algebra, BiHomBialgebra, ModuleAlgebraAction};
use crate::coalgebra::{check_comodule, Comodule};
use crate::error::{Error, Result};
use crate::linalg::{vector, Bilinear, Matrix, PowerCache, Tensor3};
use crate::maps::{columns, commute_witness, covector_compose, multiplicative_witness, require_square};
use crate::report::{first_failure, tuples, CheckReport};
use crate::twisting::{twisted_tensor_product, TwistingMap};

pub mod axiom {
    pub const OMEGA_EQUIVARIANT: &str = "hypothesis:omegaA(h.a)=omegaH(h).omegaA(a)";
    pub const RHO_MULTIPLICATIVE: &str = "rho(xy)=rho(x)rho(y)";
    pub const RHO_ALPHA: &str = "rho∘alpha=(alpha⊗alphaH)∘rho";
    pub const RHO_BETA: &str = "rho∘beta=(beta⊗betaH)∘rho";
}

/// A module algebra `A` over `H` together with the exponents `(m, n, p)`
/// selecting `R_{m,n,p}`.
#[derive(Clone, Debug)]
pub struct SmashData {
    pub h: BiHomBialgebra,
    pub a: BiHomAlgebra,
    pub action: ModuleAlgebraAction,
    pub m: i64,
    pub n: i64,
    pub p: i64,
}

impl SmashData {
    /// Exponents `(0, −1, −1)`, the ones used by the smash product.
    pub fn new(h: BiHomBialgebra, a: BiHomAlgebra, action: ModuleAlgebraAction) -> Self {
        SmashData {
            h,
            a,
            action,
            m: 0,
            n: -1,
            p: -1,
        }
    }

    pub fn with_indices(mut self, m: i64, n: i64, p: i64) -> Self {
        (self.m, self.n, self.p) = (m, n, p);
        self
    }

    fn validate(&self) -> Result<()> {
        self.h.validate()?;
        self.a.validate()?;
        let (dh, da) = (self.h.dim(), self.a.dim());
        if self.action.action.dims() != (dh, da, da) {
            return Err(Error::shape(format!(
                "action tensor has shape {:?}, expected {:?}",
                self.action.action.dims(),
                (dh, da, da)
            )));
        }
        if self.h.field() != self.a.field() {
            return Err(Error::mixed(self.h.field(), self.a.field()));
        }
        Ok(())
    }
}

/// `R_{m,n,p}(h⊗a) = alpha_H^m beta_H^n omega_H^p(h₁)·beta_A⁻¹(a) ⊗ psi_H⁻¹(h₂)`.
pub fn smash_twisting_map(s: &SmashData) -> Result<TwistingMap> {
    s.validate()?;
    let (h, a) = (&s.h, &s.a);
    for m in [&h.alpha, &h.beta, &h.psi, &h.omega, &a.alpha] {
        m.inverse()?;
    }
    let beta_a_inv = a.beta.inverse()?;
    let psi_inv = h.psi.inverse()?;
    let report = check_module_bihom_algebra(h, a, &s.action)?;
    if !report.passed() {
        return Err(Error::ModuleAxiomFailure(Box::new(report.only_failures())));
    }
    let x = &(&PowerCache::new(&h.alpha).pow(s.m)? * &PowerCache::new(&h.beta).pow(s.n)?)
        * &PowerCache::new(&h.omega).pow(s.p)?;

    let (dh, da, f) = (h.dim(), a.dim(), h.field());
    let action = Bilinear::new(&s.action.action);
    let (xs, bs, ps) = (columns(&x), columns(&beta_a_inv), columns(&psi_inv));
    let mut r = Matrix::zeros(f, da * dh, dh * da);
    for hh in 0..dh {
        for aa in 0..da {
            let mut out = vector::zeros(f, da * dh);
            for (idx, c) in h.delta.slice(hh).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let acted = action.apply(&xs[idx / dh], &bs[aa]);
                out = vector::add(&out, &vector::scale(c, &vector::tensor(&acted, &ps[idx % dh])));
            }
            r.set_column(hh * da + aa, &out);
        }
    }
    Ok(TwistingMap { r })
}

/// `A#H`: the twisted tensor product of `A` and `H` along `R_{0,−1,−1}`.
pub fn smash_product(s: &SmashData) -> Result<BiHomAlgebra> {
    if (s.m, s.n, s.p) != (0, -1, -1) {
        return Err(Error::DegenerateParameter(format!(
            "smash product uses exponents (0, -1, -1), got ({}, {}, {})",
            s.m, s.n, s.p
        )));
    }
    let r = smash_twisting_map(s)?;
    let mut out = twisted_tensor_product(&s.a, &s.h.algebra(), &r)?;
    out.labels =
        s.a.labels
            .iter()
            .flat_map(|x| s.h.labels.iter().map(move |y| format!("{x}#{y}")))
            .collect();
    Ok(out)
}

/// `A#H` as a right `H`-comodule algebra, with the verdicts of the
/// comodule axioms and of `rho` being an algebra morphism.
#[derive(Clone, Debug)]
pub struct SmashComodule {
    pub algebra: BiHomAlgebra,
    pub comodule: Comodule,
    pub report: CheckReport,
}

/// `rho(a#h) = (omega_A(a)#h₁)⊗h₂` with structure maps `psi_A⊗psi_H`, `omega_A⊗omega_H`.
pub fn smash_comodule_structure(s: &SmashData, psi_a: &Matrix, omega_a: &Matrix) -> Result<SmashComodule> {
    s.validate()?;
    let (h, a) = (&s.h, &s.a);
    let (dh, da, f) = (h.dim(), a.dim(), h.field());
    require_square("psi_A", psi_a, da, f)?;
    require_square("omega_A", omega_a, da, f)?;

    let mut hyp = CheckReport::new();
    let named = [
        ("alphaA", &a.alpha),
        ("betaA", &a.beta),
        ("psiA", psi_a),
        ("omegaA", omega_a),
    ];
    for (i, (n1, m1)) in named.iter().enumerate() {
        for (n2, m2) in &named[i + 1..] {
            hyp.record(format!("hypothesis:commute({n1},{n2})"), commute_witness(m1, m2));
        }
    }
    hyp.record(
        "hypothesis:multiplicative(omegaA)",
        multiplicative_witness(&a.mu, omega_a),
    );
    let action = Bilinear::new(&s.action.action);
    hyp.record(
        axiom::OMEGA_EQUIVARIANT,
        first_failure(tuples(&[dh, da]), |t| {
            let lhs = omega_a.apply(&action.basis(t[0], t[1]));
            let rhs = action.apply(&h.omega.column(t[0]), &omega_a.column(t[1]));
            (lhs, rhs)
        }),
    );
    if !hyp.passed() {
        return Err(Error::HypothesisFailure(Box::new(hyp.only_failures())));
    }

    let algebra = smash_product(s)?;
    let d = da * dh;
    let mut rho = Matrix::zeros(f, d * dh, d);
    for aa in 0..da {
        let wa = omega_a.column(aa);
        for hh in 0..dh {
            let mut out = vector::zeros(f, d * dh);
            for (idx, c) in h.delta.slice(hh).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let left = vector::tensor(&wa, &vector::basis(f, dh, idx / dh));
                let term = vector::tensor(&left, &vector::basis(f, dh, idx % dh));
                out = vector::add(&out, &vector::scale(c, &term));
            }
            rho.set_column(aa * dh + hh, &out);
        }
    }
    let comodule = Comodule {
        rho,
        psi: psi_a.kron(&h.psi),
        omega: omega_a.kron(&h.omega),
    };

    let mut report = CheckReport::new();
    report.merge("comodule", check_comodule(&h.coalgebra(), &comodule)?);
    let target = tensor_product(&algebra, &h.algebra())?;
    let (src, dst) = (Bilinear::new(&algebra.mu), Bilinear::new(&target.mu));
    let images = columns(&comodule.rho);
    report.record(
        axiom::RHO_MULTIPLICATIVE,
        first_failure(tuples(&[d, d]), |t| {
            let lhs = comodule.rho.apply(&src.basis(t[0], t[1]));
            let rhs = dst.apply(&images[t[0]], &images[t[1]]);
            (lhs, rhs)
        }),
    );
    for (name, m, mt) in [
        (axiom::RHO_ALPHA, &algebra.alpha, &target.alpha),
        (axiom::RHO_BETA, &algebra.beta, &target.beta),
    ] {
        report.record(
            name,
            first_failure(tuples(&[d]), |t| {
                (comodule.rho.apply(&m.column(t[0])), mt.apply(&images[t[0]]))
            }),
        );
    }
    Ok(SmashComodule {
        algebra,
        comodule,
        report,
    })
}

/// `H*` with `(f•g)(h) = f(alpha⁻¹omega⁻¹(h₁)) g(beta⁻¹psi⁻¹(h₂))`, maps
/// `f ↦ f∘alpha⁻¹`, `f ↦ f∘beta⁻¹`, and the action
/// `(h⇀f)(h′) = f(alpha⁻¹beta⁻¹(h′)h)`. The counit is the unit when it is
/// invariant under `alpha` and `beta`.
pub fn dual_module_algebra(h: &BiHomBialgebra) -> Result<(BiHomAlgebra, ModuleAlgebraAction)> {
    h.validate()?;
    let (d, f) = (h.dim(), h.field());
    let (ai, bi) = (h.alpha.inverse()?, h.beta.inverse()?);
    let (pi, oi) = (h.psi.inverse()?, h.omega.inverse()?);
    let x = &ai * &oi;
    let y = &bi * &pi;
    let z = &ai * &bi;

    let mut mu = Tensor3::zeros(f, d, d, d);
    for k in 0..d {
        for (idx, c) in h.delta.slice(k).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, q) = (idx / d, idx % d);
            for i in 0..d {
                let xi = x.get(i, p);
                if xi.is_zero() {
                    continue;
                }
                let cx = c * xi;
                for j in 0..d {
                    let yj = y.get(j, q);
                    if !yj.is_zero() {
                        let v = mu.get(i, j, k) + &(&cx * yj);
                        mu.set(i, j, k, v);
                    }
                }
            }
        }
    }
    let alpha = ai.transpose();
    let beta = bi.transpose();
    let unit = h
        .counit
        .clone()
        .filter(|e| covector_compose(e, &h.alpha) == *e && covector_compose(e, &h.beta) == *e);
    let labels = h.labels.iter().map(|l| format!("{l}*")).collect();
    let algebra = BiHomAlgebra::new(labels, mu, alpha, beta, unit)?;

    let prod = Bilinear::new(&h.mu);
    let zs = columns(&z);
    let mut action = Tensor3::zeros(f, d, d, d);
    for l in 0..d {
        let el = vector::basis(f, d, l);
        for (k, zk) in zs.iter().enumerate() {
            let v = prod.apply(zk, &el);
            for (i, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    action.set(l, i, k, c);
                }
            }
        }
    }
    Ok((algebra, ModuleAlgebraAction { action }))
}

/// The maps `f ↦ f∘psi_H⁻¹` and `f ↦ f∘omega_H⁻¹` on `H*`, in that order.
pub fn dual_comodule_maps(h: &BiHomBialgebra) -> Result<(Matrix, Matrix)> {
    Ok((h.psi.inverse()?.transpose(), h.omega.inverse()?.transpose()))
}

/// `(a#h)(a′#h′) = a(X(h₁)·Y(a′)) # Z(h₂)h′` evaluated term by term.
#[cfg(test)]
fn smash_formula(s: &SmashData, x: &Matrix, y: &Matrix, z: &Matrix) -> Tensor3 {
    let (h, a) = (&s.h, &s.a);
    let (dh, da, f) = (h.dim(), a.dim(), h.field());
    let d = da * dh;
    let (pa, ph, act) = (
        Bilinear::new(&a.mu),
        Bilinear::new(&h.mu),
        Bilinear::new(&s.action.action),
    );
    Tensor3::from_fn(f, (d, d, d), |i, j, k| {
        let (a1, h1) = (i / dh, i % dh);
        let (a2, h2) = (j / dh, j % dh);
        let mut total = crate::exactnum::Scalar::zero(f);
        for (idx, c) in h.delta.slice(h1).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let acted = act.apply(&x.column(idx / dh), &y.column(a2));
            let left = pa.apply(&vector::basis(f, da, a1), &acted);
            let right = ph.apply(&z.column(idx % dh), &vector::basis(f, dh, h2));
            total += &(c * &(&left[k / dh] * &right[k % dh]));
        }
        total
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_bihom_algebra, yau_twist};
    use crate::bialgebra::{twist_module_algebra, yau_twist_bialgebra, BialgebraMaps};
    use crate::exactnum::Field;
    use crate::exactnum::Scalar;
    use crate::fixtures::{
        cyclic_power, cyclic_self_action, group_algebra, signed_inversion, sweedler, sweedler_on_dual_numbers,
        sweedler_scaling, truncated_polynomials, twisted_cyclic_self_action,
    };
    use crate::twisting::{check_twisting_map, lift_twisting_map};

    const Q: Field = Field::Rational;

    fn twisted_c4() -> SmashData {
        let (h, a, act) = twisted_cyclic_self_action(Q, 4).unwrap();
        SmashData::new(h, a, act)
    }

    #[test]
    fn classical_indices_give_classical_smash_map() {
        let h = group_algebra(Q, 4).bialgebra;
        let s = SmashData::new(h.clone(), h.algebra(), cyclic_self_action(Q, 4)).with_indices(0, 0, 0);
        let r = smash_twisting_map(&s).unwrap();
        let act = Bilinear::new(&s.action.action);
        for hh in 0..4 {
            for aa in 0..4 {
                // g^k is group-like, so R(g^k⊗a) = g^k·a ⊗ g^k.
                let e = |i| vector::basis(Q, 4, i);
                let expected = vector::tensor(&act.apply(&e(hh), &e(aa)), &e(hh));
                assert_eq!(r.r.column(hh * 4 + aa), expected);
            }
        }
        assert!(check_twisting_map(&h.algebra(), &h.algebra(), &r).unwrap().passed());
    }

    #[test]
    fn every_index_triple_gives_a_twisting_map() {
        let s = twisted_c4();
        for (m, n, p) in [(0, -1, -1), (2, -3, 1), (1, 1, 1), (-2, 0, 2)] {
            let sd = s.clone().with_indices(m, n, p);
            let r = smash_twisting_map(&sd).unwrap();
            let report = check_twisting_map(&s.a, &s.h.algebra(), &r).unwrap();
            assert!(report.passed(), "({m},{n},{p}): {report}");
        }
    }

    #[test]
    fn smash_product_matches_formula() {
        let s = twisted_c4();
        let sp = smash_product(&s).unwrap();
        assert!(check_bihom_algebra(&sp).unwrap().passed());
        let x = &s.h.beta.inverse().unwrap() * &s.h.omega.inverse().unwrap();
        let expected = smash_formula(&s, &x, &s.a.beta.inverse().unwrap(), &s.h.psi.inverse().unwrap());
        assert_eq!(sp.mu, expected);
        assert_eq!(sp.alpha, s.a.alpha.kron(&s.h.alpha));
        assert_eq!(sp.labels[1], "g0#g1");
        assert!(matches!(
            smash_product(&s.clone().with_indices(0, 0, 0)),
            Err(Error::DegenerateParameter(_))
        ));
    }

    fn sweedler_twist(h_maps: &BialgebraMaps, a_map: &Matrix) -> SmashData {
        let h = sweedler(Q).bialgebra;
        let a = truncated_polynomials(Q, 2);
        let (th, ta, tact) = twist_module_algebra(&h, &a, &sweedler_on_dual_numbers(Q), h_maps, a_map, a_map).unwrap();
        SmashData::new(th, ta, tact)
    }

    fn half_u() -> Matrix {
        Matrix::diagonal(Q, &[Scalar::one(Q), crate::exactnum::parse_scalar(Q, "1/2").unwrap()])
    }

    #[test]
    fn hom_bialgebra_reduction() {
        let two = sweedler_scaling(Q, &Scalar::from_i64(Q, 2));
        let maps = BialgebraMaps {
            alpha: two.clone(),
            beta: two.clone(),
            psi: two.clone(),
            omega: two.clone(),
        };
        let s = sweedler_twist(&maps, &half_u());
        let sp = smash_product(&s).unwrap();
        assert!(check_bihom_algebra(&sp).unwrap().passed());
        let ai = s.h.alpha.inverse().unwrap();
        let expected = smash_formula(&s, &(&ai * &ai), &s.a.alpha.inverse().unwrap(), &ai);
        assert_eq!(sp.mu, expected);
    }

    #[test]
    fn monoidal_hom_bialgebra_reduction() {
        let two = sweedler_scaling(Q, &Scalar::from_i64(Q, 2));
        let half = two.inverse().unwrap();
        let maps = BialgebraMaps {
            alpha: two.clone(),
            beta: two.clone(),
            psi: half.clone(),
            omega: half,
        };
        let s = sweedler_twist(&maps, &half_u());
        let sp = smash_product(&s).unwrap();
        assert!(check_bihom_algebra(&sp).unwrap().passed());
        let id = Matrix::identity(Q, 4);
        let expected = smash_formula(&s, &id, &s.a.alpha.inverse().unwrap(), &s.h.alpha);
        assert_eq!(sp.mu, expected);
    }

    #[test]
    fn smash_of_twists_is_twist_of_smash() {
        let h = group_algebra(Q, 4).bialgebra;
        let a = h.algebra();
        let act = cyclic_self_action(Q, 4);
        let classical = smash_product(&SmashData::new(h.clone(), a.clone(), act.clone())).unwrap();
        let inv = cyclic_power(Q, 4, 3);
        let id = Matrix::identity(Q, 4);
        let rho = signed_inversion(Q, 4);
        let twisted = twisted_c4();
        let expected = yau_twist(&classical, &inv.kron(&inv), &rho.kron(&id)).unwrap();
        let got = smash_product(&twisted).unwrap();
        assert_eq!(got.mu, expected.mu);
        assert_eq!(got.alpha, expected.alpha);
        assert_eq!(got.beta, expected.beta);
        assert_eq!(got.unit, expected.unit);

        // The same map arises by lifting the classical smash twisting map.
        let p = smash_twisting_map(&SmashData::new(h.clone(), a.clone(), act).with_indices(0, 0, 0)).unwrap();
        let u = lift_twisting_map(&a, &h.algebra(), &p, &inv, &rho, &inv, &id).unwrap();
        assert_eq!(u, smash_twisting_map(&twisted).unwrap());
    }

    #[test]
    fn smash_comodule_algebra() {
        let h = group_algebra(Q, 2).bialgebra;
        let id = Matrix::identity(Q, 2);
        let s = SmashData::new(h.clone(), h.algebra(), cyclic_self_action(Q, 2));
        let c = smash_comodule_structure(&s, &id, &id).unwrap();
        assert!(c.report.passed(), "{}", c.report);

        let s = twisted_c4();
        let c = smash_comodule_structure(&s, &Matrix::identity(Q, 4), &signed_inversion(Q, 4)).unwrap();
        assert!(c.report.passed(), "{}", c.report);
        let inv = smash_comodule_structure(&s, &Matrix::identity(Q, 4), &cyclic_power(Q, 4, 3)).unwrap();
        assert!(inv.report.passed());
        let bad = Matrix::diagonal(
            Q,
            &[Scalar::one(Q), Scalar::from_i64(Q, 2), Scalar::one(Q), Scalar::one(Q)],
        );
        assert!(matches!(
            smash_comodule_structure(&s, &Matrix::identity(Q, 4), &bad),
            Err(Error::HypothesisFailure(_))
        ));
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let h = group_algebra(Q, 2).bialgebra;
        let (a, act) = dual_module_algebra(&h).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j {
                    vector::basis(Q, 2, i)
                } else {
                    vector::zeros(Q, 2)
                };
                assert_eq!(a.mu.fiber(i, j), &expected[..]);
            }
        }
        assert_eq!(a.unit, Some(vec![Scalar::one(Q); 2]));
        // (g^l ⇀ f_i)(g^k) = f_i(g^{k+l}), so g^l ⇀ f_i = f_{i−l}.
        for l in 0..2 {
            for i in 0..2 {
                let k = (i + 2 - l) % 2;
                assert_eq!(act.action.fiber(l, i), &vector::basis(Q, 2, k)[..]);
            }
        }
        assert!(check_module_bihom_algebra(&h, &a, &act).unwrap().passed());
    }

    #[test]
    fn dual_of_twisted_group_algebra() {
        let (h, _, _) = twisted_cyclic_self_action(Q, 4).unwrap();
        let (a, act) = dual_module_algebra(&h).unwrap();
        assert!(check_bihom_algebra(&a).unwrap().passed());
        assert!(check_module_bihom_algebra(&h, &a, &act).unwrap().passed());
        assert_eq!(a.unit, h.counit);
        let (psi_a, omega_a) = dual_comodule_maps(&h).unwrap();
        let s = SmashData::new(h, a, act);
        let c = smash_comodule_structure(&s, &psi_a, &omega_a).unwrap();
        assert!(check_bihom_algebra(&c.algebra).unwrap().passed());
        assert!(c.report.passed(), "{}", c.report);
    }

    #[test]
    fn dual_of_twisted_sweedler() {
        let two = sweedler_scaling(Q, &Scalar::from_i64(Q, 2));
        let three = sweedler_scaling(Q, &Scalar::from_i64(Q, 3));
        let id = Matrix::identity(Q, 4);
        let maps = BialgebraMaps {
            alpha: two.clone(),
            beta: id.clone(),
            psi: three,
            omega: id,
        };
        let h = yau_twist_bialgebra(&sweedler(Q).bialgebra, &maps).unwrap();
        let (a, act) = dual_module_algebra(&h).unwrap();
        assert!(check_bihom_algebra(&a).unwrap().passed());
        assert!(check_module_bihom_algebra(&h, &a, &act).unwrap().passed());
        assert_eq!(a.unit, h.counit);
        let s = SmashData::new(h, a, act);
        assert!(check_bihom_algebra(&smash_product(&s).unwrap()).unwrap().passed());
    }
}
