//! BiHom-Lie algebras, representations and semidirect products.

use crate::algebra::{check_module, BiHomAlgebra, LeftModule};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{vector, Bilinear, Matrix, Tensor3};
use crate::maps::{
    commute_witness, multiplicative_witness, precompose, require_commuting, require_multiplicative, require_square,
};
use crate::report::{first_failure, tuples, CheckReport};

pub mod axiom {
    pub const COMMUTE: &str = "commute(alpha,beta)";
    pub const MULT_ALPHA: &str = "multiplicative(alpha)";
    pub const MULT_BETA: &str = "multiplicative(beta)";
    pub const SKEW: &str = "skew:[beta(a),alpha(b)]=-[beta(b),alpha(a)]";
    pub const JACOBI: &str = "bihom-jacobi";
    pub const REP_COMMUTE: &str = "rep:commute(alphaM,betaM)";
    pub const REP_ALPHA: &str = "rep:rho(alpha(x))alphaM=alphaM rho(x)";
    pub const REP_BETA: &str = "rep:rho(beta(x))betaM=betaM rho(x)";
    pub const REP_BRACKET: &str = "rep:rho([beta(x),y])betaM";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomLieAlgebra {
    pub labels: Vec<String>,
    /// `[e_i, e_j] = Σ_k bracket[i][j][k] e_k`.
    pub bracket: Tensor3,
    pub alpha: Matrix,
    pub beta: Matrix,
}

impl BiHomLieAlgebra {
    pub fn new(labels: Vec<String>, bracket: Tensor3, alpha: Matrix, beta: Matrix) -> Result<Self> {
        let l = BiHomLieAlgebra {
            labels,
            bracket,
            alpha,
            beta,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn field(&self) -> Field {
        self.bracket.field()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dims().0
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.bracket.dims() != (d, d, d) {
            return Err(Error::shape(format!(
                "bracket tensor has shape {:?}",
                self.bracket.dims()
            )));
        }
        if self.labels.len() != d {
            return Err(Error::shape(format!("{} labels for dimension {d}", self.labels.len())));
        }
        require_square("alpha", &self.alpha, d, self.field())?;
        require_square("beta", &self.beta, d, self.field())
    }

    pub fn bracket_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        Bilinear::new(&self.bracket).apply(x, y)
    }
}

/// `ρ(e_i)(m_j) = Σ_k rho[i][j][k] m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRepresentation {
    pub rho: Tensor3,
    pub alpha: Matrix,
    pub beta: Matrix,
}

impl LieRepresentation {
    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    fn validate(&self, l: &BiHomLieAlgebra) -> Result<()> {
        let m = self.dim();
        if self.rho.dims() != (l.dim(), m, m) {
            return Err(Error::shape(format!(
                "representation tensor has shape {:?}, expected ({}, {m}, {m})",
                self.rho.dims(),
                l.dim()
            )));
        }
        require_square("alpha_M", &self.alpha, m, l.field())?;
        require_square("beta_M", &self.beta, m, l.field())
    }
}

pub fn check_bihom_lie(l: &BiHomLieAlgebra) -> Result<CheckReport> {
    l.validate()?;
    let d = l.dim();
    let br = Bilinear::new(&l.bracket);
    let a: Vec<Vec<Scalar>> = (0..d).map(|i| l.alpha.column(i)).collect();
    let b: Vec<Vec<Scalar>> = (0..d).map(|i| l.beta.column(i)).collect();
    let beta2 = &l.beta * &l.beta;
    let b2: Vec<Vec<Scalar>> = (0..d).map(|i| beta2.column(i)).collect();

    let mut report = CheckReport::new();
    report.record(axiom::COMMUTE, commute_witness(&l.alpha, &l.beta));
    report.record(axiom::MULT_ALPHA, multiplicative_witness(&l.bracket, &l.alpha));
    report.record(axiom::MULT_BETA, multiplicative_witness(&l.bracket, &l.beta));
    report.record(
        axiom::SKEW,
        first_failure(tuples(&[d, d]), |t| {
            let lhs = br.apply(&b[t[0]], &a[t[1]]);
            let rhs: Vec<Scalar> = br.apply(&b[t[1]], &a[t[0]]).iter().map(|x| -x).collect();
            (lhs, rhs)
        }),
    );
    // Inner brackets [β(e_i), α(e_j)] are shared by all three cyclic terms.
    let inner: Vec<Vec<Scalar>> = (0..d * d).map(|n| br.apply(&b[n / d], &a[n % d])).collect();
    report.record(
        axiom::JACOBI,
        first_failure(tuples(&[d, d, d]), |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut sum = br.apply(&b2[x], &inner[y * d + z]);
            sum = vector::add(&sum, &br.apply(&b2[y], &inner[z * d + x]));
            sum = vector::add(&sum, &br.apply(&b2[z], &inner[x * d + y]));
            (sum, vector::zeros(l.field(), d))
        }),
    );
    Ok(report)
}

/// `L(A)`: `[a, a′] = aa′ − (α⁻¹β(a′))(αβ⁻¹(a))` with the maps of `A`.
pub fn commutator_lie(a: &BiHomAlgebra) -> Result<BiHomLieAlgebra> {
    a.validate()?;
    let p = &a.alpha.inverse()? * &a.beta;
    let q = &a.alpha * &a.beta.inverse()?;
    let d = a.dim();
    let prod = Bilinear::new(&a.mu);
    let pc: Vec<Vec<Scalar>> = (0..d).map(|i| p.column(i)).collect();
    let qc: Vec<Vec<Scalar>> = (0..d).map(|i| q.column(i)).collect();
    let mut bracket = Tensor3::zeros(a.field(), d, d, d);
    for i in 0..d {
        for j in 0..d {
            let v = vector::sub(&prod.basis(i, j), &prod.apply(&pc[j], &qc[i]));
            bracket.set_fiber(i, j, &v);
        }
    }
    BiHomLieAlgebra::new(a.labels.clone(), bracket, a.alpha.clone(), a.beta.clone())
}

/// Bracket `[−]∘(α₂⊗β₂)` with maps `α∘α₂`, `β∘β₂`.
pub fn yau_twist_lie(l: &BiHomLieAlgebra, alpha2: &Matrix, beta2: &Matrix) -> Result<BiHomLieAlgebra> {
    l.validate()?;
    let (d, f) = (l.dim(), l.field());
    require_square("alpha2", alpha2, d, f)?;
    require_square("beta2", beta2, d, f)?;
    require_multiplicative(&l.bracket, "alpha2", alpha2)?;
    require_multiplicative(&l.bracket, "beta2", beta2)?;
    require_commuting(&[
        ("alpha", &l.alpha),
        ("beta", &l.beta),
        ("alpha2", alpha2),
        ("beta2", beta2),
    ])?;
    BiHomLieAlgebra::new(
        l.labels.clone(),
        precompose(&l.bracket, alpha2, beta2),
        &l.alpha * alpha2,
        &l.beta * beta2,
    )
}

pub fn check_representation(l: &BiHomLieAlgebra, rep: &LieRepresentation) -> Result<CheckReport> {
    l.validate()?;
    rep.validate(l)?;
    let (d, m, f) = (l.dim(), rep.dim(), l.field());
    let rho = Bilinear::new(&rep.rho);
    let br = Bilinear::new(&l.bracket);
    let act = |x: &[Scalar], v: &[Scalar]| rho.apply(x, v);
    let em = |j: usize| vector::basis(f, m, j);
    let ab = &l.alpha * &l.beta;

    let mut report = CheckReport::new();
    report.record(axiom::REP_COMMUTE, commute_witness(&rep.alpha, &rep.beta));
    for (name, map, map_m) in [
        (axiom::REP_ALPHA, &l.alpha, &rep.alpha),
        (axiom::REP_BETA, &l.beta, &rep.beta),
    ] {
        report.record(
            name,
            first_failure(tuples(&[d, m]), |t| {
                let lhs = act(&map.column(t[0]), &map_m.column(t[1]));
                let rhs = map_m.apply(&rho.basis(t[0], t[1]));
                (lhs, rhs)
            }),
        );
    }
    report.record(
        axiom::REP_BRACKET,
        first_failure(tuples(&[d, d, m]), |t| {
            let (x, y, j) = (t[0], t[1], t[2]);
            let bx = l.beta.column(x);
            let ex = vector::basis(f, d, x);
            let ey = vector::basis(f, d, y);
            let lhs = act(&br.apply(&bx, &ey), &rep.beta.column(j));
            let first = act(&ab.column(x), &rho.basis(y, j));
            let second = act(&l.beta.column(y), &act(&l.alpha.apply(&ex), &em(j)));
            (lhs, vector::sub(&first, &second))
        }),
    );
    Ok(report)
}

/// `ad(x)(y) = [x, y]` with the maps of `L`.
pub fn adjoint_rep(l: &BiHomLieAlgebra) -> Result<LieRepresentation> {
    l.validate()?;
    l.alpha.inverse()?;
    l.beta.inverse()?;
    Ok(LieRepresentation {
        rho: l.bracket.clone(),
        alpha: l.alpha.clone(),
        beta: l.beta.clone(),
    })
}

/// `L ⋉ M` on `L ⊕ M` (L coordinates first) with
/// `[(x,a),(y,b)] = ([x,y], x·b − α⁻¹β(y)·α_Mβ_M⁻¹(a))`.
pub fn semidirect_product(l: &BiHomLieAlgebra, rep: &LieRepresentation) -> Result<BiHomLieAlgebra> {
    l.validate()?;
    rep.validate(l)?;
    let (d, m, f) = (l.dim(), rep.dim(), l.field());
    let p = &l.alpha.inverse()? * &l.beta;
    let q = &rep.alpha * &rep.beta.inverse()?;
    let rho = Bilinear::new(&rep.rho);
    let n = d + m;
    let mut bracket = Tensor3::zeros(f, n, n, n);
    let embed = |v: &[Scalar], offset: usize| {
        let mut out = vector::zeros(f, n);
        out[offset..offset + v.len()].clone_from_slice(v);
        out
    };
    for i in 0..d {
        for j in 0..d {
            bracket.set_fiber(i, j, &embed(l.bracket.fiber(i, j), 0));
        }
        for j in 0..m {
            bracket.set_fiber(i, d + j, &embed(&rho.basis(i, j), d));
        }
    }
    for i in 0..m {
        let qa = q.column(i);
        for j in 0..d {
            let v: Vec<Scalar> = rho.apply(&p.column(j), &qa).iter().map(|x| -x).collect();
            bracket.set_fiber(d + i, j, &embed(&v, d));
        }
    }
    let labels = l
        .labels
        .iter()
        .cloned()
        .chain((1..=m).map(|i| format!("m{i}")))
        .collect();
    BiHomLieAlgebra::new(
        labels,
        bracket,
        l.alpha.direct_sum(&rep.alpha),
        l.beta.direct_sum(&rep.beta),
    )
}

/// A left `A`-module viewed as a representation of `L(A)`.
pub fn module_to_lie_rep(a: &BiHomAlgebra, module: &LeftModule) -> Result<LieRepresentation> {
    a.alpha.inverse()?;
    a.beta.inverse()?;
    let report = check_module(a, module)?;
    if !report.passed() {
        return Err(Error::ModuleAxiomFailure(Box::new(report)));
    }
    Ok(LieRepresentation {
        rho: module.action.clone(),
        alpha: module.alpha.clone(),
        beta: module.beta.clone(),
    })
}

/// `sl₂` on the basis `H, E, F` with identity maps.
pub fn sl2(field: Field) -> BiHomLieAlgebra {
    let s = |n| Scalar::from_i64(field, n);
    let mut t = Tensor3::zeros(field, 3, 3, 3);
    let (h, e, f) = (0, 1, 2);
    t.set(h, e, e, s(2));
    t.set(e, h, e, s(-2));
    t.set(h, f, f, s(-2));
    t.set(f, h, f, s(2));
    t.set(e, f, h, s(1));
    t.set(f, e, h, s(-1));
    let id = Matrix::identity(field, 3);
    BiHomLieAlgebra::new(vec!["H".into(), "E".into(), "F".into()], t, id.clone(), id).expect("fixed shapes")
}

/// The grading automorphism `H ↦ H, E ↦ tE, F ↦ t⁻¹F` of `sl₂`.
pub fn sl2_grading(field: Field, t: &Scalar) -> Result<Matrix> {
    let one = Scalar::one(field);
    Ok(Matrix::diagonal(field, &[one, t.clone(), t.inv()?]))
}
