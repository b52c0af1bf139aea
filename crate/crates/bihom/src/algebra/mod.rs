//! BiHom-associative algebras `(A, μ, α, β)`: `α(a)(a′a″) = (aa′)β(a″)`
//! with commuting multiplicative `α`, `β`.

mod module;

pub use module::{check_module, twist_left_module, LeftModule};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{kernel, vector, Bilinear, Matrix, Subspace, Tensor3};
use crate::maps::{
    commute_witness, default_labels, fixes, multiplicative_witness, precompose, require_commuting,
    require_multiplicative, require_square, require_vector,
};
use crate::report::{first_failure, tuples, CheckReport, Witness};

/// Axiom identifiers used in algebra reports.
pub mod axiom {
    pub const COMMUTE: &str = "commute(alpha,beta)";
    pub const MULT_ALPHA: &str = "multiplicative(alpha)";
    pub const MULT_BETA: &str = "multiplicative(beta)";
    pub const ASSOCIATIVITY: &str = "bihom-associativity";
    pub const UNIT_ALPHA: &str = "unit:alpha(1)=1";
    pub const UNIT_BETA: &str = "unit:beta(1)=1";
    pub const UNIT_RIGHT: &str = "unit:a*1=alpha(a)";
    pub const UNIT_LEFT: &str = "unit:1*a=beta(a)";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomAlgebra {
    pub labels: Vec<String>,
    /// `e_i e_j = Σ_k mu[i][j][k] e_k`.
    pub mu: Tensor3,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub unit: Option<Vec<Scalar>>,
}

impl BiHomAlgebra {
    pub fn new(
        labels: Vec<String>,
        mu: Tensor3,
        alpha: Matrix,
        beta: Matrix,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let a = BiHomAlgebra {
            labels,
            mu,
            alpha,
            beta,
            unit,
        };
        a.validate()?;
        Ok(a)
    }

    /// An associative algebra, i.e. both structure maps are the identity.
    pub fn associative(mu: Tensor3, unit: Option<Vec<Scalar>>) -> Result<Self> {
        let (d, _, _) = mu.dims();
        let id = Matrix::identity(mu.field(), d);
        BiHomAlgebra::new(default_labels(d), mu, id.clone(), id, unit)
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn dim(&self) -> usize {
        self.mu.dims().0
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field();
        if self.mu.dims() != (d, d, d) {
            return Err(Error::shape(format!("product tensor has shape {:?}", self.mu.dims())));
        }
        if self.labels.len() != d {
            return Err(Error::shape(format!("{} labels for dimension {d}", self.labels.len())));
        }
        require_square("alpha", &self.alpha, d, f)?;
        require_square("beta", &self.beta, d, f)?;
        if let Some(u) = &self.unit {
            require_vector("unit", u, d, f)?;
        }
        Ok(())
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        Bilinear::new(&self.mu).apply(x, y)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::basis(self.field(), self.dim(), i)
    }

    /// The same algebra with a different product and maps, keeping labels.
    fn rebuild(&self, mu: Tensor3, alpha: Matrix, beta: Matrix, unit: Option<Vec<Scalar>>) -> Self {
        BiHomAlgebra {
            labels: self.labels.clone(),
            mu,
            alpha,
            beta,
            unit,
        }
    }
}

/// Verifies every BiHom-associative algebra axiom over all basis tuples.
pub fn check_bihom_algebra(a: &BiHomAlgebra) -> Result<CheckReport> {
    a.validate()?;
    let d = a.dim();
    let prod = Bilinear::new(&a.mu);
    let mut report = CheckReport::new();
    report.record(axiom::COMMUTE, commute_witness(&a.alpha, &a.beta));
    report.record(axiom::MULT_ALPHA, multiplicative_witness(&a.mu, &a.alpha));
    report.record(axiom::MULT_BETA, multiplicative_witness(&a.mu, &a.beta));

    let table: Vec<Vec<Scalar>> = (0..d * d).map(|n| prod.basis(n / d, n % d)).collect();
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|i| a.alpha.column(i)).collect();
    let beta_cols: Vec<Vec<Scalar>> = (0..d).map(|i| a.beta.column(i)).collect();
    report.record(
        axiom::ASSOCIATIVITY,
        first_failure(tuples(&[d, d, d]), |t| {
            let lhs = prod.apply(&alpha_cols[t[0]], &table[t[1] * d + t[2]]);
            let rhs = prod.apply(&table[t[0] * d + t[1]], &beta_cols[t[2]]);
            (lhs, rhs)
        }),
    );

    if let Some(u) = &a.unit {
        let fixed = |m: &Matrix| {
            let image = m.apply(u);
            (image != *u).then(|| Witness::new(vec![], image, u.clone()))
        };
        report.record(axiom::UNIT_ALPHA, fixed(&a.alpha));
        report.record(axiom::UNIT_BETA, fixed(&a.beta));
        report.record(
            axiom::UNIT_RIGHT,
            first_failure(tuples(&[d]), |t| {
                (prod.apply(&a.basis(t[0]), u), alpha_cols[t[0]].clone())
            }),
        );
        report.record(
            axiom::UNIT_LEFT,
            first_failure(tuples(&[d]), |t| {
                (prod.apply(u, &a.basis(t[0])), beta_cols[t[0]].clone())
            }),
        );
    }
    Ok(report)
}

/// `(A, μ∘(α₂⊗β₂), α∘α₂, β∘β₂)`.
///
/// The unit is kept when both new maps fix it.
pub fn yau_twist(a: &BiHomAlgebra, alpha2: &Matrix, beta2: &Matrix) -> Result<BiHomAlgebra> {
    a.validate()?;
    let (d, f) = (a.dim(), a.field());
    require_square("alpha2", alpha2, d, f)?;
    require_square("beta2", beta2, d, f)?;
    require_multiplicative(&a.mu, "alpha2", alpha2)?;
    require_multiplicative(&a.mu, "beta2", beta2)?;
    require_commuting(&[
        ("alpha", &a.alpha),
        ("beta", &a.beta),
        ("alpha2", alpha2),
        ("beta2", beta2),
    ])?;
    let unit = a.unit.clone().filter(|u| fixes(alpha2, u) && fixes(beta2, u));
    Ok(a.rebuild(
        precompose(&a.mu, alpha2, beta2),
        &a.alpha * alpha2,
        &a.beta * beta2,
        unit,
    ))
}

/// The associative algebra `(A, μ∘(α⁻¹⊗β⁻¹))` with identity maps.
pub fn untwist(a: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    a.validate()?;
    let ai = a.alpha.inverse()?;
    let bi = a.beta.inverse()?;
    let id = Matrix::identity(a.field(), a.dim());
    Ok(a.rebuild(precompose(&a.mu, &ai, &bi), id.clone(), id, a.unit.clone()))
}

/// `(a⊗b)(a′⊗b′) = aa′⊗bb′` on the row-major basis `e_i ⊗ f_j ↦ i·d_B + j`.
pub fn tensor_product(a: &BiHomAlgebra, b: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    a.validate()?;
    b.validate()?;
    if a.field() != b.field() {
        return Err(Error::mixed(a.field(), b.field()));
    }
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mu = Tensor3::from_fn(a.field(), (d, d, d), |x, y, z| {
        let (i, j) = (x / db, x % db);
        let (k, l) = (y / db, y % db);
        let (m, n) = (z / db, z % db);
        let p = a.mu.get(i, k, m);
        if p.is_zero() {
            return Scalar::zero(a.field());
        }
        p * b.mu.get(j, l, n)
    });
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let unit = match (&a.unit, &b.unit) {
        (Some(u), Some(v)) => Some(vector::tensor(u, v)),
        _ => None,
    };
    BiHomAlgebra::new(labels, mu, a.alpha.kron(&b.alpha), a.beta.kron(&b.beta), unit)
}

/// `E(u, v)`: `n×n` matrices with `a∗b = u a u⁻¹ b v⁻¹`, maps `a ↦ u a u⁻¹`
/// and `a ↦ v a v⁻¹`, unit `v`. Basis `E_rs` is indexed `r·n + s`.
pub fn endomorphism_algebra(u: &Matrix, v: &Matrix) -> Result<BiHomAlgebra> {
    let n = u.rows();
    let f = u.field();
    require_square("u", u, n, f)?;
    require_square("v", v, n, f)?;
    let ui = u.inverse()?;
    let vi = v.inverse()?;
    require_commuting(&[("u", u), ("v", v)])?;
    let unit_matrix = |r: usize, s: usize| {
        let mut m = Matrix::zeros(f, n, n);
        m.set(r, s, Scalar::one(f));
        m
    };
    let flat = |m: &Matrix| m.entries().to_vec();
    let basis: Vec<Matrix> = (0..n * n).map(|x| unit_matrix(x / n, x % n)).collect();
    let d = n * n;
    let mut mu = Tensor3::zeros(f, d, d, d);
    for (i, a) in basis.iter().enumerate() {
        let left = &(&(u * a) * &ui);
        for (j, b) in basis.iter().enumerate() {
            mu.set_fiber(i, j, &flat(&(&(left * b) * &vi)));
        }
    }
    let conj = |w: &Matrix, wi: &Matrix| {
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|a| flat(&(&(w * a) * wi))).collect();
        Matrix::from_columns(f, d, &cols)
    };
    let labels = (0..d).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect();
    BiHomAlgebra::new(labels, mu, conj(u, &ui), conj(v, &vi), Some(flat(v)))
}

/// An algebra together with the inclusion of its basis into a larger space.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: BiHomAlgebra,
    /// Columns are the chosen basis vectors in the ambient coordinates.
    pub embedding: Matrix,
}

/// Restricts the product to a subspace, failing with `NotClosed` if the
/// subspace is not closed. The result has identity structure maps.
pub fn restrict_to_subspace(a: &BiHomAlgebra, basis: Vec<Vec<Scalar>>) -> Result<Subalgebra> {
    let f = a.field();
    let r = basis.len();
    let embedding = Matrix::from_columns(f, a.dim(), &basis);
    let id = Matrix::identity(f, r);
    if r == 0 {
        let algebra = BiHomAlgebra::new(vec![], Tensor3::zeros(f, 0, 0, 0), id.clone(), id, None)?;
        return Ok(Subalgebra { algebra, embedding });
    }
    let space = Subspace::new(embedding.clone());
    let prod = Bilinear::new(&a.mu);
    let mut mu = Tensor3::zeros(f, r, r, r);
    for i in 0..r {
        for j in 0..r {
            let p = prod.apply(&basis[i], &basis[j]);
            match space.coords(&p) {
                Some(c) => mu.set_fiber(i, j, &c),
                None => return Err(Error::NotClosed(Witness::new(vec![i, j], p, vec![]))),
            }
        }
    }
    let unit = a.unit.as_ref().and_then(|u| space.coords(u));
    let algebra = BiHomAlgebra::new(default_labels(r), mu, id.clone(), id, unit)?;
    Ok(Subalgebra { algebra, embedding })
}

/// The joint fixed space `{a : α(a) = β(a) = a}` as an associative algebra.
pub fn fixed_subalgebra(a: &BiHomAlgebra) -> Result<Subalgebra> {
    a.validate()?;
    let id = Matrix::identity(a.field(), a.dim());
    let stacked = (&a.alpha - &id).vstack(&(&a.beta - &id));
    restrict_to_subspace(a, kernel(&stacked))
}

/// The two 2-dimensional unital families; both have unit `e₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Needs `b ≠ 1`.
    First,
    /// Needs `a ≠ 0`.
    Second,
}

pub fn example_family(which: Family, a: &Scalar, b: &Scalar) -> Result<BiHomAlgebra> {
    let f = a.field();
    if b.field() != f {
        return Err(Error::mixed(f, b.field()));
    }
    let int = |n| Scalar::from_i64(f, n);
    let (one, zero) = (int(1), int(0));
    // Each entry lists the images of e1 and e2 and the four products.
    let (alpha2, beta2, m12, m21, m22) = match which {
        Family::First => {
            let bm1 = b - &one;
            if bm1.is_zero() {
                return Err(Error::DegenerateParameter("family 1 needs b != 1".into()));
            }
            let c = &(&int(2) * a) / &bm1;
            let a2 = a * a;
            let e22 = -&(&(&a2 * &(b - &int(2))) / &(&bm1 * &bm1));
            (
                [c.clone(), int(-1)],
                [-a, b.clone()],
                [-a, b.clone()],
                [c, int(-1)],
                [e22, a.clone()],
            )
        }
        Family::Second => {
            if a.is_zero() {
                return Err(Error::DegenerateParameter("family 2 needs a != 0".into()));
            }
            let oma = &one - a;
            let c = &(b * &oma) / a;
            (
                [c.clone(), a.clone()],
                [b.clone(), oma.clone()],
                [b.clone(), oma],
                [c, a.clone()],
                [zero.clone(), b / a],
            )
        }
    };
    let col = |x: &[Scalar; 2]| vec![x[0].clone(), x[1].clone()];
    let e1 = vec![one.clone(), zero.clone()];
    let alpha = Matrix::from_columns(f, 2, &[e1.clone(), col(&alpha2)]);
    let beta = Matrix::from_columns(f, 2, &[e1.clone(), col(&beta2)]);
    let mut mu = Tensor3::zeros(f, 2, 2, 2);
    mu.set_fiber(0, 0, &e1);
    mu.set_fiber(0, 1, &col(&m12));
    mu.set_fiber(1, 0, &col(&m21));
    mu.set_fiber(1, 1, &col(&m22));
    BiHomAlgebra::new(default_labels(2), mu, alpha, beta, Some(e1))
}

/// Solves for the unit: `e_i u = α(e_i)`, `u e_i = β(e_i)`, `α(u) = β(u) = u`.
pub fn find_unit(a: &BiHomAlgebra) -> Option<Vec<Scalar>> {
    let (d, f) = (a.dim(), a.field());
    let prod = Bilinear::new(&a.mu);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for i in 0..d {
        // Column j of each block is the product with e_j in the unknown slot.
        let right: Vec<Vec<Scalar>> = (0..d).map(|j| prod.basis(i, j)).collect();
        let left: Vec<Vec<Scalar>> = (0..d).map(|j| prod.basis(j, i)).collect();
        for k in 0..d {
            rows.push((0..d).map(|j| right[j][k].clone()).collect());
            rhs.push(a.alpha.get(k, i).clone());
            rows.push((0..d).map(|j| left[j][k].clone()).collect());
            rhs.push(a.beta.get(k, i).clone());
        }
    }
    let id = Matrix::identity(f, d);
    for m in [&a.alpha, &a.beta] {
        let diff = m - &id;
        for k in 0..d {
            rows.push(diff.row(k).to_vec());
            rhs.push(Scalar::zero(f));
        }
    }
    let system = Matrix::from_rows(f, rows).ok()?;
    let sol = crate::linalg::solve(&system, &rhs).ok()?;
    sol.is_unique().then_some(sol.particular)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(Q, n)
    }

    fn fam1() -> BiHomAlgebra {
        example_family(Family::First, &s(3), &s(2)).unwrap()
    }

    #[test]
    fn family_one_at_three_two() {
        let a = fam1();
        assert_eq!(a.alpha.column(1), vec![s(6), s(-1)]);
        assert_eq!(a.beta.column(1), vec![s(-3), s(2)]);
        assert_eq!(a.mu.fiber(1, 1), &[s(0), s(3)]);
        assert!(check_bihom_algebra(&a).unwrap().passed());
        assert_eq!(find_unit(&a), Some(vec![s(1), s(0)]));
    }

    #[test]
    fn family_two_at_one_five() {
        let a = example_family(Family::Second, &s(1), &s(5)).unwrap();
        assert_eq!(a.alpha.column(1), vec![s(0), s(1)]);
        assert_eq!(a.mu.fiber(1, 1), &[s(0), s(5)]);
        assert!(check_bihom_algebra(&a).unwrap().passed());
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            example_family(Family::First, &s(3), &s(1)),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            example_family(Family::Second, &s(0), &s(1)),
            Err(Error::DegenerateParameter(_))
        ));
    }

    #[test]
    fn corrupted_product_is_caught() {
        let mut a = fam1();
        a.mu.set_fiber(1, 0, &[s(0), s(1)]);
        let report = check_bihom_algebra(&a).unwrap();
        let entry = report.entry(axiom::ASSOCIATIVITY).unwrap();
        assert!(!entry.passed);
        let w = entry.witness.as_ref().unwrap();
        assert_eq!(w.indices.len(), 3);
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn endomorphism_algebra_unit_and_fixed_space() {
        let u = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let v = Matrix::from_ints(Q, &[&[3, 0], &[0, 1]]);
        let e = endomorphism_algebra(&u, &v).unwrap();
        assert!(check_bihom_algebra(&e).unwrap().passed());
        assert_eq!(e.unit, Some(vec![s(3), s(0), s(0), s(1)]));
        assert_eq!(find_unit(&e), e.unit);
        let fixed = fixed_subalgebra(&e).unwrap();
        assert_eq!(fixed.algebra.dim(), 2);
        // The fixed space is spanned by E11 and E22.
        for c in 0..2 {
            let col = fixed.embedding.column(c);
            assert!(col[1].is_zero() && col[2].is_zero());
        }
        let swap = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        assert!(matches!(
            endomorphism_algebra(&u, &swap),
            Err(Error::MapsDoNotCommute { .. })
        ));
    }

    #[test]
    fn zero_algebra_has_no_unit() {
        let z = BiHomAlgebra::associative(Tensor3::zeros(Q, 1, 1, 1), None).unwrap();
        assert_eq!(find_unit(&z), None);
    }

    #[test]
    fn untwist_needs_invertible_maps() {
        let mut a = fam1();
        a.alpha = Matrix::zeros(Q, 2, 2);
        assert!(matches!(untwist(&a), Err(Error::Singular { .. })));
    }

    #[test]
    fn family_one_fixed_space_contains_unit() {
        let sub = fixed_subalgebra(&fam1()).unwrap();
        let space = Subspace::new(sub.embedding.clone());
        assert!(space.coords(&[s(1), s(0)]).is_some());
    }
}
