//! BiHom-bialgebras, primitive elements, module algebras and antipodes.

use crate::algebra::{check_bihom_algebra, check_module, BiHomAlgebra, LeftModule};
use crate::coalgebra::{check_bihom_coalgebra, BiHomCoalgebra};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{kernel, solve, vector, Bilinear, Matrix, Tensor3};
use crate::maps::{
    columns, commute_witness, comultiplicative_witness, coproduct_apply, covector_compose, fixes,
    multiplicative_witness, pair_apply, postcompose_coproduct, precompose, require_commuting, require_square,
    require_vector, tensor_square_product,
};
use crate::report::{first_failure, tuples, CheckReport, Witness};

pub mod axiom {
    pub const COMPATIBILITY: &str = "delta(hh')=h1h'1*h2h'2";
    pub const UNIT_COPRODUCT: &str = "unital:delta(1)=1*1";
    pub const COUNIT_UNIT: &str = "unital:eps(1)=1";
    pub const PSI_UNIT: &str = "unital:psi(1)=1";
    pub const OMEGA_UNIT: &str = "unital:omega(1)=1";
    pub const COUNIT_ALPHA: &str = "counital:eps(alpha)=eps";
    pub const COUNIT_BETA: &str = "counital:eps(beta)=eps";
    pub const COUNIT_MULT: &str = "counital:eps(hh')=eps(h)eps(h')";
    pub const MODULE_ALGEBRA: &str = "module-algebra:h.(aa')";
    pub const ANTIPODE_LEFT: &str = "antipode:betapsi(S(h1))alphaomega(h2)=eps(h)1";
    pub const ANTIPODE_RIGHT: &str = "antipode:betapsi(h1)alphaomega(S(h2))=eps(h)1";
    pub const ANTIPODE_UNIT: &str = "antipode:S(1)=1";
    pub const ANTIPODE_COUNIT: &str = "antipode:eps(S)=eps";
    pub const ANTIPODE_ANTIMULT: &str = "antipode:S(beta(a)alpha(b))=S(beta(b))S(alpha(a))";
    pub const ANTIPODE_ANTICOMULT: &str = "antipode:alpha(S(h)1)*beta(S(h)2)=beta(S(h2))*alpha(S(h1))";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomBialgebra {
    pub labels: Vec<String>,
    pub mu: Tensor3,
    pub delta: Tensor3,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub psi: Matrix,
    pub omega: Matrix,
    pub unit: Option<Vec<Scalar>>,
    pub counit: Option<Vec<Scalar>>,
}

/// Four structure maps `α, β, ψ, ω` applied together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraMaps {
    pub alpha: Matrix,
    pub beta: Matrix,
    pub psi: Matrix,
    pub omega: Matrix,
}

impl BialgebraMaps {
    pub fn identity(field: Field, d: usize) -> Self {
        let id = Matrix::identity(field, d);
        BialgebraMaps {
            alpha: id.clone(),
            beta: id.clone(),
            psi: id.clone(),
            omega: id,
        }
    }

    pub fn named(&self) -> [(&'static str, &Matrix); 4] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("psi", &self.psi),
            ("omega", &self.omega),
        ]
    }
}

impl BiHomBialgebra {
    /// A classical bialgebra: all four maps are the identity.
    pub fn classical(
        labels: Vec<String>,
        mu: Tensor3,
        delta: Tensor3,
        unit: Option<Vec<Scalar>>,
        counit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let d = mu.dims().0;
        let maps = BialgebraMaps::identity(mu.field(), d);
        BiHomBialgebra::from_maps(labels, mu, delta, maps, unit, counit)
    }

    pub fn from_maps(
        labels: Vec<String>,
        mu: Tensor3,
        delta: Tensor3,
        maps: BialgebraMaps,
        unit: Option<Vec<Scalar>>,
        counit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let h = BiHomBialgebra {
            labels,
            mu,
            delta,
            alpha: maps.alpha,
            beta: maps.beta,
            psi: maps.psi,
            omega: maps.omega,
            unit,
            counit,
        };
        h.validate()?;
        Ok(h)
    }

    pub fn from_parts(a: &BiHomAlgebra, c: &BiHomCoalgebra) -> Result<Self> {
        if a.dim() != c.dim() {
            return Err(Error::shape("algebra and coalgebra dimensions differ"));
        }
        let h = BiHomBialgebra {
            labels: a.labels.clone(),
            mu: a.mu.clone(),
            delta: c.delta.clone(),
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
            psi: c.psi.clone(),
            omega: c.omega.clone(),
            unit: a.unit.clone(),
            counit: c.counit.clone(),
        };
        h.validate()?;
        Ok(h)
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn dim(&self) -> usize {
        self.mu.dims().0
    }

    pub fn maps(&self) -> BialgebraMaps {
        BialgebraMaps {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            psi: self.psi.clone(),
            omega: self.omega.clone(),
        }
    }

    pub fn algebra(&self) -> BiHomAlgebra {
        BiHomAlgebra {
            labels: self.labels.clone(),
            mu: self.mu.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> BiHomCoalgebra {
        BiHomCoalgebra {
            labels: self.labels.clone(),
            delta: self.delta.clone(),
            psi: self.psi.clone(),
            omega: self.omega.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.delta.dims() != (d, d, d) {
            return Err(Error::shape(format!(
                "coproduct tensor has shape {:?}",
                self.delta.dims()
            )));
        }
        self.algebra().validate()?;
        self.coalgebra().validate()
    }

    fn require_unit(&self) -> Result<&[Scalar]> {
        self.unit.as_deref().ok_or(Error::MissingUnit)
    }
}

pub fn check_bihom_bialgebra(h: &BiHomBialgebra) -> Result<CheckReport> {
    h.validate()?;
    let d = h.dim();
    let f = h.field();
    let mut report = check_bihom_algebra(&h.algebra())?;
    report.merge("", check_bihom_coalgebra(&h.coalgebra())?);

    let prod = Bilinear::new(&h.mu);
    let cop: Vec<Vec<Scalar>> = (0..d).map(|i| h.delta.slice(i).to_vec()).collect();
    report.record(
        axiom::COMPATIBILITY,
        first_failure(tuples(&[d, d]), |t| {
            let lhs = coproduct_apply(&h.delta, &prod.basis(t[0], t[1]));
            let rhs = tensor_square_product(&prod, d, &cop[t[0]], &cop[t[1]]);
            (lhs, rhs)
        }),
    );
    for (x, y) in [("alpha", "psi"), ("alpha", "omega"), ("beta", "psi"), ("beta", "omega")] {
        let pick = |n: &str| match n {
            "alpha" => &h.alpha,
            "beta" => &h.beta,
            "psi" => &h.psi,
            _ => &h.omega,
        };
        report.record(format!("commute({x},{y})"), commute_witness(pick(x), pick(y)));
    }
    report.record("comultiplicative(alpha)", comultiplicative_witness(&h.delta, &h.alpha));
    report.record("comultiplicative(beta)", comultiplicative_witness(&h.delta, &h.beta));
    report.record("multiplicative(psi)", multiplicative_witness(&h.mu, &h.psi));
    report.record("multiplicative(omega)", multiplicative_witness(&h.mu, &h.omega));

    let vec_eq = |lhs: Vec<Scalar>, rhs: Vec<Scalar>| (lhs != rhs).then(|| Witness::new(vec![], lhs, rhs));
    if let Some(u) = &h.unit {
        report.record(
            axiom::UNIT_COPRODUCT,
            vec_eq(coproduct_apply(&h.delta, u), vector::tensor(u, u)),
        );
        report.record(axiom::PSI_UNIT, vec_eq(h.psi.apply(u), u.clone()));
        report.record(axiom::OMEGA_UNIT, vec_eq(h.omega.apply(u), u.clone()));
    }
    if let Some(e) = &h.counit {
        if let Some(u) = &h.unit {
            report.record(axiom::COUNIT_UNIT, vec_eq(vec![dot(e, u)], vec![Scalar::one(f)]));
        }
        report.record(axiom::COUNIT_ALPHA, vec_eq(covector_compose(e, &h.alpha), e.clone()));
        report.record(axiom::COUNIT_BETA, vec_eq(covector_compose(e, &h.beta), e.clone()));
        report.record(
            axiom::COUNIT_MULT,
            first_failure(tuples(&[d, d]), |t| {
                (vec![dot(e, &prod.basis(t[0], t[1]))], vec![&e[t[0]] * &e[t[1]]])
            }),
        );
    }
    Ok(report)
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let f = a.first().map_or(Field::Rational, Scalar::field);
    a.iter().zip(b).fold(Scalar::zero(f), |acc, (x, y)| &acc + &(x * y))
}

fn bialgebra_map_witness(h: &BiHomBialgebra, name: &str, m: &Matrix) -> Result<()> {
    if let Some(w) = multiplicative_witness(&h.mu, m) {
        return Err(Error::NotBialgebraMap(format!("{name} is not multiplicative"), w));
    }
    if let Some(w) = comultiplicative_witness(&h.delta, m) {
        return Err(Error::NotBialgebraMap(format!("{name} is not comultiplicative"), w));
    }
    Ok(())
}

/// `(H, μ∘(α′⊗β′), (ω′⊗ψ′)∘Δ, αα′, ββ′, ψψ′, ωω′)`.
///
/// The unit survives when all primed maps fix it, the counit when it is
/// invariant under all of them.
pub fn yau_twist_bialgebra(h: &BiHomBialgebra, by: &BialgebraMaps) -> Result<BiHomBialgebra> {
    h.validate()?;
    let (d, f) = (h.dim(), h.field());
    for (name, m) in by.named() {
        require_square(name, m, d, f)?;
        bialgebra_map_witness(h, name, m)?;
    }
    let own = h.maps();
    let mut all: Vec<(&str, &Matrix)> = own.named().to_vec();
    let primed: Vec<(String, &Matrix)> = by.named().iter().map(|(n, m)| (format!("{n}'"), *m)).collect();
    all.extend(primed.iter().map(|(n, m)| (n.as_str(), *m)));
    require_commuting(&all)?;

    let mats = [&by.alpha, &by.beta, &by.psi, &by.omega];
    let unit = h.unit.clone().filter(|u| mats.iter().all(|m| fixes(m, u)));
    let counit = h
        .counit
        .clone()
        .filter(|e| mats.iter().all(|m| covector_compose(e, m) == *e));
    Ok(BiHomBialgebra {
        labels: h.labels.clone(),
        mu: precompose(&h.mu, &by.alpha, &by.beta),
        delta: postcompose_coproduct(&h.delta, &by.omega, &by.psi),
        alpha: &h.alpha * &by.alpha,
        beta: &h.beta * &by.beta,
        psi: &h.psi * &by.psi,
        omega: &h.omega * &by.omega,
        unit,
        counit,
    })
}

/// Basis of the primitive space `{x : Δ(x) = 1⊗x + x⊗1}`.
pub fn find_primitives(h: &BiHomBialgebra) -> Result<Vec<Vec<Scalar>>> {
    h.validate()?;
    let u = h.require_unit()?;
    let d = h.dim();
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let e = h.algebra().basis(i);
            let expected = vector::add(&vector::tensor(u, &e), &vector::tensor(&e, u));
            vector::sub(h.delta.slice(i), &expected)
        })
        .collect();
    Ok(kernel(&Matrix::from_columns(h.field(), d * d, &cols)))
}

/// `None` when `x` is primitive, otherwise both sides of the defining equation.
pub fn primitive_witness(h: &BiHomBialgebra, x: &[Scalar]) -> Result<Option<Witness>> {
    let u = h.require_unit()?;
    require_vector("element", x, h.dim(), h.field())?;
    let lhs = coproduct_apply(&h.delta, x);
    let rhs = vector::add(&vector::tensor(u, x), &vector::tensor(x, u));
    Ok((lhs != rhs).then(|| Witness::new(vec![], lhs, rhs)))
}

/// `[x, y] = xy − α⁻¹β(y) αβ⁻¹(x)` for primitive `x`, `y`.
///
/// Also confirms that the result is primitive, that `ω(x) = ψ(x)`, and that
/// `α^p β^q(x)` is primitive for `p, q ∈ {−1, 0, 1}`.
pub fn primitive_bracket(h: &BiHomBialgebra, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    h.validate()?;
    let ai = h.alpha.inverse()?;
    let bi = h.beta.inverse()?;
    for v in [x, y] {
        if let Some(w) = primitive_witness(h, v)? {
            return Err(Error::NotPrimitive(w));
        }
    }
    let prod = Bilinear::new(&h.mu);
    let left = (&ai * &h.beta).apply(y);
    let right = (&h.alpha * &bi).apply(x);
    let bracket = vector::sub(&prod.apply(x, y), &prod.apply(&left, &right));
    if let Some(w) = primitive_witness(h, &bracket)? {
        return Err(Error::NotPrimitive(w));
    }
    let mut post = CheckReport::new();
    let (ox, px) = (h.omega.apply(x), h.psi.apply(x));
    post.record("omega(x)=psi(x)", (ox != px).then(|| Witness::new(vec![], ox, px)));
    let a_pows = [ai.clone(), Matrix::identity(h.field(), h.dim()), h.alpha.clone()];
    let b_pows = [bi.clone(), Matrix::identity(h.field(), h.dim()), h.beta.clone()];
    for (p, ap) in a_pows.iter().enumerate() {
        for (q, bq) in b_pows.iter().enumerate() {
            let image = (ap * bq).apply(x);
            let name = format!("primitive(alpha^{}beta^{}(x))", p as i64 - 1, q as i64 - 1);
            post.record(name, primitive_witness(h, &image)?);
        }
    }
    if !post.passed() {
        return Err(Error::ConditionFailure(Box::new(post)));
    }
    Ok(bracket)
}

/// An action `H ⊗ A → A`; `action[h][a][k]` is the `e_k` coefficient of `e_h · e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraAction {
    pub action: Tensor3,
}

/// Module axioms of `(A, α_A, β_A)` over `H` plus
/// `h·(aa′) = [α_H⁻¹ω_H⁻¹(h₁)·a][β_H⁻¹ψ_H⁻¹(h₂)·a′]`.
pub fn check_module_bihom_algebra(
    h: &BiHomBialgebra,
    a: &BiHomAlgebra,
    act: &ModuleAlgebraAction,
) -> Result<CheckReport> {
    h.validate()?;
    a.validate()?;
    let x = &h.alpha.inverse()? * &h.omega.inverse()?;
    let y = &h.beta.inverse()? * &h.psi.inverse()?;
    let module = LeftModule {
        action: act.action.clone(),
        alpha: a.alpha.clone(),
        beta: a.beta.clone(),
    };
    let mut report = check_module(&h.algebra(), &module)?;

    let (dh, da) = (h.dim(), a.dim());
    let action = Bilinear::new(&act.action);
    let prod = Bilinear::new(&a.mu);
    let xs = columns(&x);
    let ys = columns(&y);
    let ea = |i: usize| vector::basis(a.field(), da, i);
    // left[j][i] = X(e_j)·e_i and right[k][i] = Y(e_k)·e_i.
    let left: Vec<Vec<Vec<Scalar>>> = (0..dh)
        .map(|j| (0..da).map(|i| action.apply(&xs[j], &ea(i))).collect())
        .collect();
    let right: Vec<Vec<Vec<Scalar>>> = (0..dh)
        .map(|k| (0..da).map(|i| action.apply(&ys[k], &ea(i))).collect())
        .collect();
    report.record(
        axiom::MODULE_ALGEBRA,
        first_failure(tuples(&[dh, da, da]), |t| {
            let (hh, p, q) = (t[0], t[1], t[2]);
            let lhs = action.apply(&h.algebra().basis(hh), &prod.basis(p, q));
            let mut rhs = vector::zeros(a.field(), da);
            for (n, c) in h.delta.slice(hh).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = prod.apply(&left[n / dh][p], &right[n % dh][q]);
                rhs = vector::add(&rhs, &vector::scale(c, &term));
            }
            (lhs, rhs)
        }),
    );
    Ok(report)
}

/// Twists a classical module algebra with `h ▷ a = α_H(h)·β_A(a)`.
pub fn twist_module_algebra(
    h: &BiHomBialgebra,
    a: &BiHomAlgebra,
    act: &ModuleAlgebraAction,
    h_maps: &BialgebraMaps,
    alpha_a: &Matrix,
    beta_a: &Matrix,
) -> Result<(BiHomBialgebra, BiHomAlgebra, ModuleAlgebraAction)> {
    h.validate()?;
    a.validate()?;
    let (dh, da, f) = (h.dim(), a.dim(), h.field());
    if act.action.dims() != (dh, da, da) {
        return Err(Error::shape(format!("action tensor has shape {:?}", act.action.dims())));
    }
    for (name, m) in h_maps.named() {
        require_square(name, m, dh, f)?;
    }
    require_square("alpha_A", alpha_a, da, f)?;
    require_square("beta_A", beta_a, da, f)?;

    let mut hyp = CheckReport::new();
    hyp.merge("H:", check_bihom_bialgebra(h)?);
    hyp.merge("A:", check_bihom_algebra(a)?);
    let classical_module = ModuleAlgebraAction {
        action: act.action.clone(),
    };
    hyp.merge("action:", check_module_bihom_algebra(h, a, &classical_module)?);
    for (name, m) in h_maps.named() {
        hyp.record(format!("multiplicative({name}_H)"), multiplicative_witness(&h.mu, m));
        hyp.record(
            format!("comultiplicative({name}_H)"),
            comultiplicative_witness(&h.delta, m),
        );
    }
    let named = h_maps.named();
    for (i, (n1, m1)) in named.iter().enumerate() {
        for (n2, m2) in &named[i + 1..] {
            hyp.record(format!("commute({n1}_H,{n2}_H)"), commute_witness(m1, m2));
        }
    }
    hyp.record("multiplicative(alpha_A)", multiplicative_witness(&a.mu, alpha_a));
    hyp.record("multiplicative(beta_A)", multiplicative_witness(&a.mu, beta_a));
    hyp.record("commute(alpha_A,beta_A)", commute_witness(alpha_a, beta_a));
    let action = Bilinear::new(&act.action);
    for (name, mh, ma) in [
        ("alpha_A(h.a)=alpha_H(h).alpha_A(a)", &h_maps.alpha, alpha_a),
        ("beta_A(h.a)=beta_H(h).beta_A(a)", &h_maps.beta, beta_a),
    ] {
        hyp.record(
            name,
            first_failure(tuples(&[dh, da]), |t| {
                let lhs = ma.apply(&action.basis(t[0], t[1]));
                let rhs = action.apply(&mh.column(t[0]), &ma.column(t[1]));
                (lhs, rhs)
            }),
        );
    }
    if !hyp.passed() {
        return Err(Error::HypothesisFailure(Box::new(hyp.only_failures())));
    }

    let twisted_h = yau_twist_bialgebra(h, h_maps)?;
    let twisted_a = crate::algebra::yau_twist(a, alpha_a, beta_a)?;
    let twisted_action = ModuleAlgebraAction {
        action: precompose(&act.action, &h_maps.alpha, beta_a),
    };
    Ok((twisted_h, twisted_a, twisted_action))
}

/// `ω = α⁻¹` and `ψ = β⁻¹`, with a unit and a counit present.
pub fn is_monoidal(h: &BiHomBialgebra) -> Result<bool> {
    h.validate()?;
    let ai = h.alpha.inverse()?;
    let bi = h.beta.inverse()?;
    Ok(h.unit.is_some() && h.counit.is_some() && h.omega == ai && h.psi == bi)
}

/// Solves `S(h₁)h₂ = ε(h)1 = h₁S(h₂)` together with `αS = Sα`, `βS = Sβ`.
///
/// Returns `None` when the system is inconsistent.
pub fn solve_antipode_monoidal(h: &BiHomBialgebra) -> Result<Option<Matrix>> {
    if !is_monoidal(h)? {
        return Err(Error::NotMonoidal);
    }
    let u = h.require_unit()?;
    let eps = h.counit.as_ref().ok_or(Error::MissingUnit)?;
    let (d, f) = (h.dim(), h.field());
    let n = d * d;
    // Unknown s[r][c] sits at index r·d + c.
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(4 * n);
    let mut rhs: Vec<Scalar> = Vec::with_capacity(4 * n);
    for i in 0..d {
        let mut left = vec![vector::zeros(f, n); d];
        let mut right = vec![vector::zeros(f, n); d];
        for j in 0..d {
            for k in 0..d {
                let c = h.delta.get(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for r in 0..d {
                    // S(e_j) e_k contributes s[r][j] μ(e_r, e_k).
                    for (m, p) in h.mu.fiber(r, k).iter().enumerate() {
                        if !p.is_zero() {
                            left[m][r * d + j] += &(c * p);
                        }
                    }
                    for (m, p) in h.mu.fiber(j, r).iter().enumerate() {
                        if !p.is_zero() {
                            right[m][r * d + k] += &(c * p);
                        }
                    }
                }
            }
        }
        for m in 0..d {
            let target = &eps[i] * &u[m];
            rows.push(std::mem::take(&mut left[m]));
            rhs.push(target.clone());
            rows.push(std::mem::take(&mut right[m]));
            rhs.push(target);
        }
    }
    for map in [&h.alpha, &h.beta] {
        for m in 0..d {
            for c in 0..d {
                let mut row = vector::zeros(f, n);
                for r in 0..d {
                    row[r * d + c] += map.get(m, r);
                    row[m * d + r] -= map.get(r, c);
                }
                rows.push(row);
                rhs.push(Scalar::zero(f));
            }
        }
    }
    let system = Matrix::from_rows(f, rows)?;
    match solve(&system, &rhs) {
        Err(Error::Inconsistent) => Ok(None),
        Err(e) => Err(e),
        Ok(sol) if !sol.is_unique() => Err(Error::NonUnique(sol.kernel.len())),
        Ok(sol) => Ok(Some(Matrix::from_fn(f, d, d, |r, c| sol.particular[r * d + c].clone()))),
    }
}

/// `βψ(S(h₁))αω(h₂) = ε(h)1 = βψ(h₁)αω(S(h₂))` and `S` commuting with all four maps.
pub fn check_antipode_general(h: &BiHomBialgebra, s: &Matrix) -> Result<CheckReport> {
    h.validate()?;
    let (d, f) = (h.dim(), h.field());
    require_square("S", s, d, f)?;
    let u = h.require_unit()?;
    let eps = h.counit.as_ref().ok_or(Error::MissingUnit)?;
    let mut report = CheckReport::new();
    for (name, m) in h.maps().named() {
        report.record(format!("antipode:commute(S,{name})"), commute_witness(s, m));
    }
    let bp = &h.beta * &h.psi;
    let ao = &h.alpha * &h.omega;
    let prod = Bilinear::new(&h.mu);
    let cop: Vec<Vec<Scalar>> = (0..d).map(|i| h.delta.slice(i).to_vec()).collect();
    let convolve = |first: &Matrix, second: &Matrix, i: usize| -> Vec<Scalar> {
        let (fc, sc) = (columns(first), columns(second));
        let mut out = vector::zeros(f, d);
        for (n, c) in cop[i].iter().enumerate() {
            if !c.is_zero() {
                out = vector::add(&out, &vector::scale(c, &prod.apply(&fc[n / d], &sc[n % d])));
            }
        }
        out
    };
    let (bps, aos) = (&bp * s, &ao * s);
    report.record(
        axiom::ANTIPODE_LEFT,
        first_failure(tuples(&[d]), |t| {
            (convolve(&bps, &ao, t[0]), vector::scale(&eps[t[0]], u))
        }),
    );
    report.record(
        axiom::ANTIPODE_RIGHT,
        first_failure(tuples(&[d]), |t| {
            (convolve(&bp, &aos, t[0]), vector::scale(&eps[t[0]], u))
        }),
    );
    Ok(report)
}

/// A monoidal BiHom-bialgebra together with its antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalHopf {
    pub bialgebra: BiHomBialgebra,
    pub antipode: Matrix,
}

/// `(H, μ∘(α⊗β), (α⁻¹⊗β⁻¹)∘Δ, α, β, ψ = β⁻¹, ω = α⁻¹)` with the same antipode.
pub fn hopf_to_monoidal(h: &BiHomBialgebra, s: &Matrix, alpha: &Matrix, beta: &Matrix) -> Result<MonoidalHopf> {
    h.validate()?;
    let (d, f) = (h.dim(), h.field());
    require_square("S", s, d, f)?;
    let u = h.require_unit()?;
    let eps = h.counit.as_ref().ok_or(Error::MissingUnit)?;
    let mut inverses = Vec::new();
    for (name, m) in [("alpha", alpha), ("beta", beta)] {
        require_square(name, m, d, f)?;
        let inv = m
            .inverse()
            .map_err(|_| Error::NotAutomorphism(format!("{name} is not invertible")))?;
        if !fixes(m, u) {
            return Err(Error::NotAutomorphism(format!("{name} does not fix the unit")));
        }
        if covector_compose(eps, m) != *eps {
            return Err(Error::NotAutomorphism(format!("{name} does not preserve the counit")));
        }
        bialgebra_map_witness(h, name, m)?;
        inverses.push(inv);
    }
    require_commuting(&[("alpha", alpha), ("beta", beta)])?;
    let by = BialgebraMaps {
        alpha: alpha.clone(),
        beta: beta.clone(),
        psi: inverses[1].clone(),
        omega: inverses[0].clone(),
    };
    let bialgebra = yau_twist_bialgebra(h, &by)?;
    Ok(MonoidalHopf {
        bialgebra,
        antipode: s.clone(),
    })
}

/// Unit and counit preservation, anti-multiplicativity and anti-comultiplicativity of `S`.
pub fn check_antipode_properties(h: &BiHomBialgebra, s: &Matrix) -> Result<CheckReport> {
    h.validate()?;
    let (d, f) = (h.dim(), h.field());
    require_square("S", s, d, f)?;
    let mut report = CheckReport::new();
    let single = |lhs: Vec<Scalar>, rhs: Vec<Scalar>| (lhs != rhs).then(|| Witness::new(vec![], lhs, rhs));
    if let Some(u) = &h.unit {
        report.record(axiom::ANTIPODE_UNIT, single(s.apply(u), u.clone()));
    }
    if let Some(e) = &h.counit {
        report.record(axiom::ANTIPODE_COUNIT, single(covector_compose(e, s), e.clone()));
    }
    let prod = Bilinear::new(&h.mu);
    let (sb, sa) = (columns(&(s * &h.beta)), columns(&(s * &h.alpha)));
    let (bc, ac) = (columns(&h.beta), columns(&h.alpha));
    report.record(
        axiom::ANTIPODE_ANTIMULT,
        first_failure(tuples(&[d, d]), |t| {
            let lhs = s.apply(&prod.apply(&bc[t[0]], &ac[t[1]]));
            let rhs = prod.apply(&sb[t[1]], &sa[t[0]]);
            (lhs, rhs)
        }),
    );
    let (bs, as_) = (columns(&(&h.beta * s)), columns(&(&h.alpha * s)));
    report.record(
        axiom::ANTIPODE_ANTICOMULT,
        first_failure(tuples(&[d]), |t| {
            let lhs = pair_apply(&coproduct_apply(&h.delta, &s.column(t[0])), d, &ac, &bc);
            // Flip h₁ ⊗ h₂ to h₂ ⊗ h₁ before applying βS ⊗ αS.
            let slice = h.delta.slice(t[0]);
            let flipped: Vec<Scalar> = (0..d * d).map(|n| slice[(n % d) * d + n / d].clone()).collect();
            let rhs = pair_apply(&flipped, d, &bs, &as_);
            (lhs, rhs)
        }),
    );
    Ok(report)
}
