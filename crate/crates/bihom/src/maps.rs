//! Shared checks on structure maps.

use crate::error::{Error, Result};
use crate::exactnum::{axpy, Field, Scalar};
use crate::linalg::{vector, Bilinear, Matrix, Tensor3};
use crate::report::{first_failure, matrix_identity, tuples, unflatten, Witness};

/// `a b = b a`, witnessed by the first basis vector where they differ.
pub fn commute_witness(a: &Matrix, b: &Matrix) -> Option<Witness> {
    matrix_identity(&(a * b), &(b * a), &[a.cols()])
}

/// `m(e_i e_j) = m(e_i) m(e_j)` for all basis pairs.
pub fn multiplicative_witness(mu: &Tensor3, m: &Matrix) -> Option<Witness> {
    let d = m.rows();
    let prod = Bilinear::new(mu);
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| m.column(i)).collect();
    first_failure(tuples(&[d, d]), |t| {
        let lhs = m.apply(&prod.basis(t[0], t[1]));
        let rhs = prod.apply(&images[t[0]], &images[t[1]]);
        (lhs, rhs)
    })
}

/// `(m ⊗ m) Δ = Δ m` on every basis vector.
pub fn comultiplicative_witness(delta: &Tensor3, m: &Matrix) -> Option<Witness> {
    let d = m.cols();
    let cols = columns(m);
    first_failure(tuples(&[d]), |t| {
        let lhs = pair_apply(delta.slice(t[0]), d, &cols, &cols);
        let rhs = coproduct_apply(delta, &cols[t[0]]);
        (lhs, rhs)
    })
}

/// All columns of `m`, i.e. the images of the basis vectors.
pub fn columns(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// `Δ(v)` in the row-major basis of `V2 ⊗ V3`.
pub fn coproduct_apply(delta: &Tensor3, v: &[Scalar]) -> Vec<Scalar> {
    let (_, d2, d3) = delta.dims();
    let mut out = vector::zeros(delta.field(), d2 * d3);
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, c, delta.slice(i));
        }
    }
    out
}

/// `(f ⊗ g)(x)` for `x` in `V ⊗ W` with `dim W = w`, given the images
/// of basis vectors under `f` and `g`.
pub fn pair_apply(x: &[Scalar], w: usize, f: &[Vec<Scalar>], g: &[Vec<Scalar>]) -> Vec<Scalar> {
    let p1 = f.first().map_or(0, Vec::len);
    let p2 = g.first().map_or(0, Vec::len);
    let field = x.first().map(Scalar::field);
    let Some(field) = field else {
        return Vec::new();
    };
    let mut out = vector::zeros(field, p1 * p2);
    for (n, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (fi, gj) = (&f[n / w], &g[n % w]);
        for (a, fa) in fi.iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            let cf = c * fa;
            for (b, gb) in gj.iter().enumerate() {
                if !gb.is_zero() {
                    out[a * p2 + b] += &(&cf * gb);
                }
            }
        }
    }
    out
}

/// Fails with `MapsDoNotCommute` on the first non-commuting pair.
pub fn require_commuting(maps: &[(&str, &Matrix)]) -> Result<()> {
    for (i, (na, a)) in maps.iter().enumerate() {
        for (nb, b) in &maps[i + 1..] {
            if let Some(w) = commute_witness(a, b) {
                return Err(Error::MapsDoNotCommute {
                    first: na.to_string(),
                    second: nb.to_string(),
                    witness: w,
                });
            }
        }
    }
    Ok(())
}

pub fn require_multiplicative(mu: &Tensor3, name: &str, m: &Matrix) -> Result<()> {
    match multiplicative_witness(mu, m) {
        Some(w) => Err(Error::NotMultiplicative {
            map: name.to_string(),
            witness: w,
        }),
        None => Ok(()),
    }
}

pub fn require_comultiplicative(delta: &Tensor3, name: &str, m: &Matrix) -> Result<()> {
    match comultiplicative_witness(delta, m) {
        Some(w) => Err(Error::NotComultiplicative {
            map: name.to_string(),
            witness: w,
        }),
        None => Ok(()),
    }
}

/// Checks that `m` is a square matrix of size `d` over `field`.
pub fn require_square(name: &str, m: &Matrix, d: usize, field: Field) -> Result<()> {
    if m.rows() != d || m.cols() != d {
        return Err(Error::shape(format!(
            "{name} is {}x{}, expected {d}x{d}",
            m.rows(),
            m.cols()
        )));
    }
    if m.field() != field {
        return Err(Error::mixed(field, m.field()));
    }
    Ok(())
}

pub fn require_vector(name: &str, v: &[Scalar], d: usize, field: Field) -> Result<()> {
    if v.len() != d {
        return Err(Error::shape(format!("{name} has length {}, expected {d}", v.len())));
    }
    if let Some(x) = v.iter().find(|x| x.field() != field) {
        return Err(Error::mixed(field, x.field()));
    }
    Ok(())
}

/// The bilinear map `μ ∘ (a ⊗ b)` as a new tensor.
pub fn precompose(mu: &Tensor3, a: &Matrix, b: &Matrix) -> Tensor3 {
    let (d1, d2, d3) = mu.dims();
    let prod = Bilinear::new(mu);
    let ac: Vec<Vec<Scalar>> = (0..d1).map(|i| a.column(i)).collect();
    let bc: Vec<Vec<Scalar>> = (0..d2).map(|j| b.column(j)).collect();
    let mut out = Tensor3::zeros(mu.field(), d1, d2, d3);
    for i in 0..d1 {
        for j in 0..d2 {
            out.set_fiber(i, j, &prod.apply(&ac[i], &bc[j]));
        }
    }
    out
}

/// The comultiplication `(a ⊗ b) ∘ Δ` as a new tensor.
pub fn postcompose_coproduct(delta: &Tensor3, a: &Matrix, b: &Matrix) -> Tensor3 {
    let (d1, _, d3) = delta.dims();
    let (ac, bc) = (columns(a), columns(b));
    let (p1, p2) = (a.rows(), b.rows());
    let mut out = Tensor3::zeros(delta.field(), d1, p1, p2);
    for i in 0..d1 {
        let image = pair_apply(delta.slice(i), d3, &ac, &bc);
        for (n, x) in image.into_iter().enumerate() {
            out.set(i, n / p2, n % p2, x);
        }
    }
    out
}

/// Default basis labels `e1, e2, ...`.
pub fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("e{i}")).collect()
}

/// `f ∘ m` for a covector `f`, i.e. the row vector `f m`.
pub fn covector_compose(f: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    m.transpose().apply(f)
}

/// Whether `v` is fixed by `m`.
pub fn fixes(m: &Matrix, v: &[Scalar]) -> bool {
    m.apply(v) == v
}

/// Zero vector helper re-exported for sibling modules.
pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vector::zeros(field, n)
}

/// `(a⊗b)(c⊗e) = ac ⊗ be` for `x, y ∈ A ⊗ A`, with `prod` the product of `A`.
pub fn tensor_square_product(prod: &Bilinear, d: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let Some(field) = x.first().map(Scalar::field) else {
        return Vec::new();
    };
    let mut out = vector::zeros(field, d * d);
    for (n1, c1) in x.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (n2, c2) in y.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let left = prod.basis(n1 / d, n2 / d);
            if vector::is_zero(&left) {
                continue;
            }
            let right = prod.basis(n1 % d, n2 % d);
            let c = c1 * c2;
            for (a, l) in left.iter().enumerate() {
                if l.is_zero() {
                    continue;
                }
                let cl = &c * l;
                for (b, r) in right.iter().enumerate() {
                    if !r.is_zero() {
                        out[a * d + b] += &(&cl * r);
                    }
                }
            }
        }
    }
    out
}

/// A matrix stored as its columns with zero entries dropped.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn new(m: &Matrix) -> Self {
        let cols = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: m.rows(), cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }
}

/// `f_1 ⊗ … ⊗ f_k` acting on row-major tensors, without forming the
/// Kronecker product.
#[derive(Clone, Debug)]
pub struct Kron {
    field: Field,
    factors: Vec<SparseMatrix>,
}

impl Kron {
    pub fn new(factors: &[&Matrix]) -> Self {
        let field = factors.first().expect("at least one factor").field();
        Kron {
            field,
            factors: factors.iter().map(|m| SparseMatrix::new(m)).collect(),
        }
    }

    pub fn in_dim(&self) -> usize {
        self.factors.iter().map(SparseMatrix::cols).product()
    }

    pub fn out_dim(&self) -> usize {
        self.factors.iter().map(SparseMatrix::rows).product()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(x.len(), self.in_dim());
        let in_dims: Vec<usize> = self.factors.iter().map(SparseMatrix::cols).collect();
        let mut out = vector::zeros(self.field, self.out_dim());
        for (n, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = unflatten(n, &in_dims);
            let mut terms = vec![(0usize, c.clone())];
            for (f, &i) in self.factors.iter().zip(&idx) {
                let col = f.column(i);
                terms = terms
                    .iter()
                    .flat_map(|(pos, v)| col.iter().map(move |(r, e)| (pos * f.rows() + r, v * e)))
                    .collect();
                if terms.is_empty() {
                    break;
                }
            }
            for (pos, v) in terms {
                out[pos] += &v;
            }
        }
        out
    }
}

/// Applies the steps in order, first step first.
pub fn apply_chain(steps: &[&Kron], x: &[Scalar]) -> Vec<Scalar> {
    steps.iter().fold(x.to_vec(), |v, k| k.apply(&v))
}

/// Compares two composites on every basis tensor of the domain `dims`.
pub fn chain_identity(lhs: &[&Kron], rhs: &[&Kron], dims: &[usize], field: Field) -> Option<Witness> {
    let n: usize = dims.iter().product();
    (0..n).find_map(|i| {
        let e = vector::basis(field, n, i);
        let (l, r) = (apply_chain(lhs, &e), apply_chain(rhs, &e));
        (l != r).then(|| Witness::new(unflatten(i, dims), l, r))
    })
}

/// The matrix whose columns are the images of the basis vectors under `f`.
pub fn materialize(field: Field, rows: usize, cols: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Matrix {
    let images: Vec<Vec<Scalar>> = (0..cols).map(|c| f(&vector::basis(field, cols, c))).collect();
    Matrix::from_columns(field, rows, &images)
}
