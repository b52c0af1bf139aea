//! BiHom-coassociative coalgebras, comodules, duality and convolution.

use crate::algebra::{fixed_subalgebra, BiHomAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{vector, Matrix, Tensor3};
use crate::maps::{
    columns, commute_witness, comultiplicative_witness, covector_compose, default_labels, pair_apply,
    postcompose_coproduct, require_commuting, require_comultiplicative, require_square, require_vector,
};
use crate::report::{first_failure, matrix_identity, tuples, CheckReport, Witness};

/// Largest convolution algebra that is materialized.
pub const MAX_CONVOLUTION_DIM: usize = 64;

pub mod axiom {
    pub const COMMUTE: &str = "commute(psi,omega)";
    pub const COMULT_PSI: &str = "comultiplicative(psi)";
    pub const COMULT_OMEGA: &str = "comultiplicative(omega)";
    pub const COASSOCIATIVITY: &str = "bihom-coassociativity";
    pub const COUNIT_RIGHT: &str = "counit:(id*eps)delta=omega";
    pub const COUNIT_LEFT: &str = "counit:(eps*id)delta=psi";
    pub const COUNIT_PSI: &str = "counit:eps(psi)=eps";
    pub const COUNIT_OMEGA: &str = "counit:eps(omega)=eps";
    pub const COMODULE_COMMUTE: &str = "comodule:commute(psiM,omegaM)";
    pub const COMODULE_PSI: &str = "comodule:(psiM*psiC)rho=rho psiM";
    pub const COMODULE_OMEGA: &str = "comodule:(omegaM*omegaC)rho=rho omegaM";
    pub const COMODULE_COASSOCIATIVITY: &str = "comodule:(omegaM*delta)rho=(rho*psiC)rho";
    pub const COMODULE_COUNITAL: &str = "comodule:(id*eps)rho=omegaM";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomCoalgebra {
    pub labels: Vec<String>,
    /// `Δ(e_i) = Σ_{j,k} delta[i][j][k] e_j ⊗ e_k`.
    pub delta: Tensor3,
    pub psi: Matrix,
    pub omega: Matrix,
    /// Row vector of `ε(e_i)`.
    pub counit: Option<Vec<Scalar>>,
}

impl BiHomCoalgebra {
    pub fn new(
        labels: Vec<String>,
        delta: Tensor3,
        psi: Matrix,
        omega: Matrix,
        counit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let c = BiHomCoalgebra {
            labels,
            delta,
            psi,
            omega,
            counit,
        };
        c.validate()?;
        Ok(c)
    }

    /// A coassociative coalgebra with identity structure maps.
    pub fn coassociative(delta: Tensor3, counit: Option<Vec<Scalar>>) -> Result<Self> {
        let d = delta.dims().0;
        let id = Matrix::identity(delta.field(), d);
        BiHomCoalgebra::new(default_labels(d), delta, id.clone(), id, counit)
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn dim(&self) -> usize {
        self.delta.dims().0
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field();
        if self.delta.dims() != (d, d, d) {
            return Err(Error::shape(format!(
                "coproduct tensor has shape {:?}",
                self.delta.dims()
            )));
        }
        if self.labels.len() != d {
            return Err(Error::shape(format!("{} labels for dimension {d}", self.labels.len())));
        }
        require_square("psi", &self.psi, d, f)?;
        require_square("omega", &self.omega, d, f)?;
        if let Some(e) = &self.counit {
            require_vector("counit", e, d, f)?;
        }
        Ok(())
    }

    /// Images `Δ(e_i)` in the row-major basis of `C ⊗ C`.
    pub fn coproducts(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.delta.slice(i).to_vec()).collect()
    }

    pub fn rebuild(&self, delta: Tensor3, psi: Matrix, omega: Matrix, counit: Option<Vec<Scalar>>) -> Self {
        BiHomCoalgebra {
            labels: self.labels.clone(),
            delta,
            psi,
            omega,
            counit,
        }
    }
}

/// `Δ(g) = g ⊗ g`, `ε(g) = 1` on `n` basis elements.
pub fn grouplike(field: Field, labels: Vec<String>) -> BiHomCoalgebra {
    let n = labels.len();
    let delta = Tensor3::from_fn(field, (n, n, n), |i, j, k| {
        if i == j && j == k {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let id = Matrix::identity(field, n);
    BiHomCoalgebra::new(labels, delta, id.clone(), id, Some(vec![Scalar::one(field); n])).expect("consistent shapes")
}

/// Counit applied on one tensor leg: `(id ⊗ ε)` or `(ε ⊗ id)` of `x ∈ C ⊗ C`.
fn counit_leg(x: &[Scalar], d: usize, eps: &[Scalar], right: bool) -> Vec<Scalar> {
    let f = eps.first().map_or(Field::Rational, Scalar::field);
    let id = columns(&Matrix::identity(f, d));
    let e: Vec<Vec<Scalar>> = eps.iter().map(|x| vec![x.clone()]).collect();
    if right {
        pair_apply(x, d, &id, &e)
    } else {
        pair_apply(x, d, &e, &id)
    }
}

pub fn check_bihom_coalgebra(c: &BiHomCoalgebra) -> Result<CheckReport> {
    c.validate()?;
    let d = c.dim();
    let mut report = CheckReport::new();
    report.record(axiom::COMMUTE, commute_witness(&c.psi, &c.omega));
    report.record(axiom::COMULT_PSI, comultiplicative_witness(&c.delta, &c.psi));
    report.record(axiom::COMULT_OMEGA, comultiplicative_witness(&c.delta, &c.omega));
    report.record(axiom::COASSOCIATIVITY, coassociativity_witness(c));
    if let Some(eps) = &c.counit {
        let cop = c.coproducts();
        report.record(
            axiom::COUNIT_RIGHT,
            first_failure(tuples(&[d]), |t| {
                (counit_leg(&cop[t[0]], d, eps, true), c.omega.column(t[0]))
            }),
        );
        report.record(
            axiom::COUNIT_LEFT,
            first_failure(tuples(&[d]), |t| {
                (counit_leg(&cop[t[0]], d, eps, false), c.psi.column(t[0]))
            }),
        );
        let fixed = |m: &Matrix| {
            let composed = covector_compose(eps, m);
            (composed != *eps).then(|| Witness::new(vec![], composed, eps.clone()))
        };
        report.record(axiom::COUNIT_PSI, fixed(&c.psi));
        report.record(axiom::COUNIT_OMEGA, fixed(&c.omega));
    }
    Ok(report)
}

/// `Δ(h₁) ⊗ ψ(h₂) = ω(h₁) ⊗ Δ(h₂)` evaluated leg by leg on each basis vector.
pub fn coassociativity_witness(c: &BiHomCoalgebra) -> Option<Witness> {
    let d = c.dim();
    let cop = c.coproducts();
    let psi = columns(&c.psi);
    let omega = columns(&c.omega);
    first_failure(tuples(&[d]), |t| {
        let lhs = pair_apply(&cop[t[0]], d, &cop, &psi);
        let rhs = pair_apply(&cop[t[0]], d, &omega, &cop);
        (lhs, rhs)
    })
}

/// `(Δ ⊗ ψ)∘Δ = (ω ⊗ Δ)∘Δ` as a product of Kronecker matrices.
pub fn coassociativity_matrix_witness(c: &BiHomCoalgebra) -> Option<Witness> {
    let dm = c.delta.coproduct_matrix();
    let lhs = &dm.kron(&c.psi) * &dm;
    let rhs = &c.omega.kron(&dm) * &dm;
    matrix_identity(&lhs, &rhs, &[c.dim()])
}

/// `(C, (ω₂⊗ψ₂)∘Δ, ψ∘ψ₂, ω∘ω₂)`.
///
/// The counit is kept when `ε∘ψ₂ = ε∘ω₂ = ε`.
pub fn yau_twist_coalgebra(c: &BiHomCoalgebra, psi2: &Matrix, omega2: &Matrix) -> Result<BiHomCoalgebra> {
    c.validate()?;
    let (d, f) = (c.dim(), c.field());
    require_square("psi2", psi2, d, f)?;
    require_square("omega2", omega2, d, f)?;
    require_comultiplicative(&c.delta, "psi2", psi2)?;
    require_comultiplicative(&c.delta, "omega2", omega2)?;
    require_commuting(&[("psi", &c.psi), ("omega", &c.omega), ("psi2", psi2), ("omega2", omega2)])?;
    let counit = c
        .counit
        .clone()
        .filter(|e| covector_compose(e, psi2) == *e && covector_compose(e, omega2) == *e);
    Ok(c.rebuild(
        postcompose_coproduct(&c.delta, omega2, psi2),
        &c.psi * psi2,
        &c.omega * omega2,
        counit,
    ))
}

fn starred(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| format!("{l}*")).collect()
}

/// `C*` with `(fg)(x) = f(x₁)g(x₂)`, maps `ωᵀ`, `ψᵀ` and unit `ε`.
pub fn dual_algebra(c: &BiHomCoalgebra) -> Result<BiHomAlgebra> {
    c.validate()?;
    let d = c.dim();
    let mu = Tensor3::from_fn(c.field(), (d, d, d), |i, j, k| c.delta.get(k, i, j).clone());
    BiHomAlgebra::new(
        starred(&c.labels),
        mu,
        c.omega.transpose(),
        c.psi.transpose(),
        c.counit.clone(),
    )
}

/// `A*` with `Δ` dual to `μ`, `ψ = βᵀ`, `ω = αᵀ` and counit evaluation at the unit.
///
/// Without a unit the coalgebra has no counit.
pub fn dual_coalgebra(a: &BiHomAlgebra) -> Result<BiHomCoalgebra> {
    a.validate()?;
    let d = a.dim();
    let delta = Tensor3::from_fn(a.field(), (d, d, d), |k, i, j| a.mu.get(i, j, k).clone());
    BiHomCoalgebra::new(
        starred(&a.labels),
        delta,
        a.beta.transpose(),
        a.alpha.transpose(),
        a.unit.clone(),
    )
}

/// `Δ(c⊗d) = c₁⊗d₁⊗c₂⊗d₂` on the basis `e_i ⊗ f_j ↦ i·d_D + j`.
pub fn tensor_product_coalgebras(c: &BiHomCoalgebra, d: &BiHomCoalgebra) -> Result<BiHomCoalgebra> {
    c.validate()?;
    d.validate()?;
    if c.field() != d.field() {
        return Err(Error::mixed(c.field(), d.field()));
    }
    let (dc, dd) = (c.dim(), d.dim());
    let n = dc * dd;
    let delta = Tensor3::from_fn(c.field(), (n, n, n), |x, y, z| {
        let p = c.delta.get(x / dd, y / dd, z / dd);
        if p.is_zero() {
            return Scalar::zero(c.field());
        }
        p * d.delta.get(x % dd, y % dd, z % dd)
    });
    let labels = c
        .labels
        .iter()
        .flat_map(|x| d.labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let counit = match (&c.counit, &d.counit) {
        (Some(a), Some(b)) => Some(vector::tensor(a, b)),
        _ => None,
    };
    BiHomCoalgebra::new(labels, delta, c.psi.kron(&d.psi), c.omega.kron(&d.omega), counit)
}

/// A right comodule; column `j` of `rho` is `ρ(m_j)` in the basis `m_a ⊗ c_b ↦ a·dim C + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub rho: Matrix,
    pub psi: Matrix,
    pub omega: Matrix,
}

impl Comodule {
    pub fn dim(&self) -> usize {
        self.psi.rows()
    }

    /// `C` over itself with `ρ = Δ`.
    pub fn regular(c: &BiHomCoalgebra) -> Self {
        Comodule {
            rho: c.delta.coproduct_matrix(),
            psi: c.psi.clone(),
            omega: c.omega.clone(),
        }
    }

    fn validate(&self, c: &BiHomCoalgebra) -> Result<()> {
        let m = self.dim();
        if self.rho.rows() != m * c.dim() || self.rho.cols() != m {
            return Err(Error::shape(format!(
                "coaction is {}x{}, expected {}x{m}",
                self.rho.rows(),
                self.rho.cols(),
                m * c.dim()
            )));
        }
        require_square("psi_M", &self.psi, m, c.field())?;
        require_square("omega_M", &self.omega, m, c.field())
    }
}

pub fn check_comodule(c: &BiHomCoalgebra, module: &Comodule) -> Result<CheckReport> {
    c.validate()?;
    module.validate(c)?;
    let (m, dc) = (module.dim(), c.dim());
    let rho = columns(&module.rho);
    let (psi_m, omega_m) = (columns(&module.psi), columns(&module.omega));
    let (psi_c, omega_c) = (columns(&c.psi), columns(&c.omega));
    let cop = c.coproducts();
    let mut report = CheckReport::new();
    report.record(axiom::COMODULE_COMMUTE, commute_witness(&module.psi, &module.omega));
    for (name, mm, mc, map) in [
        (axiom::COMODULE_PSI, &psi_m, &psi_c, &module.psi),
        (axiom::COMODULE_OMEGA, &omega_m, &omega_c, &module.omega),
    ] {
        report.record(
            name,
            first_failure(tuples(&[m]), |t| {
                let lhs = pair_apply(&rho[t[0]], dc, mm, mc);
                let rhs = module.rho.apply(&map.column(t[0]));
                (lhs, rhs)
            }),
        );
    }
    report.record(
        axiom::COMODULE_COASSOCIATIVITY,
        first_failure(tuples(&[m]), |t| {
            let lhs = pair_apply(&rho[t[0]], dc, &omega_m, &cop);
            let rhs = pair_apply(&rho[t[0]], dc, &rho, &psi_c);
            (lhs, rhs)
        }),
    );
    if let Some(eps) = &c.counit {
        report.record(
            axiom::COMODULE_COUNITAL,
            first_failure(tuples(&[m]), |t| {
                let e: Vec<Vec<Scalar>> = eps.iter().map(|x| vec![x.clone()]).collect();
                let id = columns(&Matrix::identity(c.field(), m));
                (pair_apply(&rho[t[0]], dc, &id, &e), omega_m[t[0]].clone())
            }),
        );
    }
    Ok(report)
}

/// Twists a comodule over a coassociative coalgebra into a comodule over
/// `C_(ψ_C, ω_C)` with coaction `(ω_M ⊗ ψ_C)∘ρ`.
///
/// Returns the twisted coalgebra and the new comodule.
pub fn twist_comodule(
    c: &BiHomCoalgebra,
    rho: &Matrix,
    psi_c: &Matrix,
    omega_c: &Matrix,
    psi_m: &Matrix,
    omega_m: &Matrix,
) -> Result<(BiHomCoalgebra, Comodule)> {
    c.validate()?;
    let (dc, f) = (c.dim(), c.field());
    require_square("psi_C", psi_c, dc, f)?;
    require_square("omega_C", omega_c, dc, f)?;
    let plain = Comodule {
        rho: rho.clone(),
        psi: psi_m.clone(),
        omega: omega_m.clone(),
    };
    plain.validate(c)?;
    let m = plain.dim();

    let id = Matrix::identity(f, dc);
    let classical = c.rebuild(c.delta.clone(), id.clone(), id, c.counit.clone());
    let mut cond = CheckReport::new();
    cond.record("coassociative", coassociativity_witness(&classical));
    let rho_cols = columns(rho);
    let cop = classical.coproducts();
    let id_m = columns(&Matrix::identity(f, m));
    let id_c = columns(&Matrix::identity(f, dc));
    cond.record(
        "coaction",
        first_failure(tuples(&[m]), |t| {
            let lhs = pair_apply(&rho_cols[t[0]], dc, &rho_cols, &id_c);
            let rhs = pair_apply(&rho_cols[t[0]], dc, &id_m, &cop);
            (lhs, rhs)
        }),
    );
    cond.record("comultiplicative(psi_C)", comultiplicative_witness(&c.delta, psi_c));
    cond.record("comultiplicative(omega_C)", comultiplicative_witness(&c.delta, omega_c));
    cond.record("commute(psi_C,omega_C)", commute_witness(psi_c, omega_c));
    let twisted_maps = classical.rebuild(c.delta.clone(), psi_c.clone(), omega_c.clone(), None);
    let equivariance = check_comodule(&twisted_maps, &plain)?;
    for name in [axiom::COMODULE_COMMUTE, axiom::COMODULE_PSI, axiom::COMODULE_OMEGA] {
        cond.record(name, equivariance.entry(name).and_then(|e| e.witness.clone()));
    }
    if !cond.passed() {
        return Err(Error::ConditionFailure(Box::new(cond)));
    }

    let twisted = yau_twist_coalgebra(&classical, psi_c, omega_c)?;
    let omega_cols = columns(omega_m);
    let psi_cols = columns(psi_c);
    let new_cols: Vec<Vec<Scalar>> = rho_cols
        .iter()
        .map(|col| pair_apply(col, dc, &omega_cols, &psi_cols))
        .collect();
    let module = Comodule {
        rho: Matrix::from_columns(f, m * dc, &new_cols),
        psi: psi_m.clone(),
        omega: omega_m.clone(),
    };
    Ok((twisted, module))
}

/// `Hom(C, A)` with `f ⋆ g = μ∘(f⊗g)∘Δ`, `φ(f) = α∘f∘ω`, `γ(f) = β∘f∘ψ`.
///
/// The elementary map `e_c ↦ e_a` has index `a·dim C + c`. The unit is
/// `η∘ε` when `A` is unital and `C` counital.
pub fn convolution_algebra(c: &BiHomCoalgebra, a: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    c.validate()?;
    a.validate()?;
    if c.field() != a.field() {
        return Err(Error::mixed(c.field(), a.field()));
    }
    let (dc, da, f) = (c.dim(), a.dim(), c.field());
    let n = dc * da;
    if n > MAX_CONVOLUTION_DIM {
        return Err(Error::TooLarge(n));
    }
    let mut mu = Tensor3::zeros(f, n, n, n);
    for x in 0..da {
        for y in 0..da {
            let prod = a.mu.fiber(x, y);
            for j in 0..dc {
                for k in 0..dc {
                    for (cc, dcoef) in (0..dc).map(|cc| (cc, c.delta.get(cc, j, k))) {
                        if dcoef.is_zero() {
                            continue;
                        }
                        for (m, p) in prod.iter().enumerate() {
                            if !p.is_zero() {
                                mu.set(x * dc + j, y * dc + k, m * dc + cc, dcoef * p);
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .map(|i| format!("{}<-{}", a.labels[i / dc], c.labels[i % dc]))
        .collect();
    let unit = match (&a.unit, &c.counit) {
        (Some(u), Some(e)) => Some(vector::tensor(u, e)),
        _ => None,
    };
    BiHomAlgebra::new(
        labels,
        mu,
        a.alpha.kron(&c.omega.transpose()),
        a.beta.kron(&c.psi.transpose()),
        unit,
    )
}

/// Maps `f` with `α∘f∘ω = f` and `β∘f∘ψ = f`, as an associative algebra.
pub fn underline_hom(c: &BiHomCoalgebra, a: &BiHomAlgebra) -> Result<Subalgebra> {
    fixed_subalgebra(&convolution_algebra(c, a)?)
}
