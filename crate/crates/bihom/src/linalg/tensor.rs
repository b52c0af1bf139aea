use crate::error::{Error, Result};
use crate::exactnum::{axpy, Field, Scalar};

use super::matrix::Matrix;

/// Rank-3 array of scalars indexed `(i, j, k)`.
///
/// For a product this holds structure constants `e_i e_j = Σ_k t[i][j][k] e_k`;
/// for a coproduct `Δ(e_i) = Σ_{j,k} t[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            field,
            dims: (d1, d2, d3),
            data: vec![Scalar::zero(field); d1 * d2 * d3],
        }
    }

    pub fn from_fn(
        field: Field,
        (d1, d2, d3): (usize, usize, usize),
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(d1 * d2 * d3);
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 {
            field,
            dims: (d1, d2, d3),
            data,
        }
    }

    /// Builds from nested arrays `[i][j][k]`, validating shape and field.
    pub fn from_nested(field: Field, nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d1 = nested.len();
        let d2 = nested.first().map_or(0, Vec::len);
        let d3 = nested.first().and_then(|m| m.first()).map_or(0, Vec::len);
        let mut data = Vec::with_capacity(d1 * d2 * d3);
        for (i, plane) in nested.into_iter().enumerate() {
            if plane.len() != d2 {
                return Err(Error::shape(format!(
                    "tensor slice {i} has {} rows, expected {d2}",
                    plane.len()
                )));
            }
            for (j, fiber) in plane.into_iter().enumerate() {
                if fiber.len() != d3 {
                    return Err(Error::shape(format!(
                        "tensor fiber ({i},{j}) has {} entries, expected {d3}",
                        fiber.len()
                    )));
                }
                for x in fiber {
                    if x.field() != field {
                        return Err(Error::mixed(field, x.field()));
                    }
                    data.push(x);
                }
            }
        }
        Ok(Tensor3 {
            field,
            dims: (d1, d2, d3),
            data,
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        let (d1, d2, _) = self.dims;
        (0..d1)
            .map(|i| (0..d2).map(|j| self.fiber(i, j).to_vec()).collect())
            .collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.index(i, j, k);
        self.data[idx] = v;
    }

    /// The entries `t[i][j][..]`, e.g. the coordinates of `e_i e_j`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.data[start..start + self.dims.2]
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: &[Scalar]) {
        let start = self.index(i, j, 0);
        self.data[start..start + self.dims.2].clone_from_slice(v);
    }

    /// The entries `t[i][..][..]` flattened row-major, e.g. `Δ(e_i)` in `V ⊗ V`.
    pub fn slice(&self, i: usize) -> &[Scalar] {
        let n = self.dims.1 * self.dims.2;
        &self.data[i * n..(i + 1) * n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Matrix of the bilinear map `V1 ⊗ V2 → V3`: column `i*d2+j` is `t[i][j][..]`.
    pub fn bilinear_matrix(&self) -> Matrix {
        let (d1, d2, d3) = self.dims;
        Matrix::from_fn(self.field, d3, d1 * d2, |k, c| self.get(c / d2, c % d2, k).clone())
    }

    /// Inverse of [`Tensor3::bilinear_matrix`].
    pub fn from_bilinear_matrix(m: &Matrix, d1: usize, d2: usize) -> Result<Self> {
        if m.cols() != d1 * d2 {
            return Err(Error::shape("bilinear matrix has the wrong number of columns"));
        }
        Ok(Tensor3::from_fn(m.field(), (d1, d2, m.rows()), |i, j, k| {
            m.get(k, i * d2 + j).clone()
        }))
    }

    /// Matrix of the linear map `V1 → V2 ⊗ V3`: column `i` is `t[i][..][..]`.
    pub fn coproduct_matrix(&self) -> Matrix {
        let (d1, d2, d3) = self.dims;
        Matrix::from_fn(self.field, d2 * d3, d1, |r, i| self.data[i * d2 * d3 + r].clone())
    }

    /// Inverse of [`Tensor3::coproduct_matrix`].
    pub fn from_coproduct_matrix(m: &Matrix, d2: usize, d3: usize) -> Result<Self> {
        if m.rows() != d2 * d3 {
            return Err(Error::shape("coproduct matrix has the wrong number of rows"));
        }
        Ok(Tensor3::from_fn(m.field(), (m.cols(), d2, d3), |i, j, k| {
            m.get(j * d3 + k, i).clone()
        }))
    }
}

/// Evaluates `Σ_{i,j} x_i y_j t[i][j][..]`.
pub fn bilinear_apply(t: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let (d1, d2, d3) = t.dims();
    if x.len() != d1 || y.len() != d2 {
        return Err(Error::shape(format!(
            "bilinear map on {d1}x{d2} applied to vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    let mut out = vec![Scalar::zero(t.field()); d3];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                axpy(&mut out, &(xi * yj), t.fiber(i, j));
            }
        }
    }
    Ok(out)
}

/// A bilinear map with the nonzero entries of each fiber precomputed.
///
/// Axiom checks evaluate the same product many times on sparse vectors;
/// this keeps each evaluation proportional to the number of nonzeros.
#[derive(Clone, Debug)]
pub struct Bilinear {
    field: Field,
    dims: (usize, usize, usize),
    fibers: Vec<Vec<(usize, Scalar)>>,
}

impl Bilinear {
    pub fn new(t: &Tensor3) -> Self {
        let (d1, d2, _) = t.dims();
        let fibers = (0..d1 * d2)
            .map(|n| {
                t.fiber(n / d2, n % d2)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        Bilinear {
            field: t.field(),
            dims: t.dims(),
            fibers,
        }
    }

    pub fn out_dim(&self) -> usize {
        self.dims.2
    }

    /// The product of two basis vectors as a dense vector.
    pub fn basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dims.2];
        for (k, c) in &self.fibers[i * self.dims.1 + j] {
            out[*k] = c.clone();
        }
        out
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!((x.len(), y.len()), (self.dims.0, self.dims.1));
        let mut out = vec![Scalar::zero(self.field); self.dims.2];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let fiber = &self.fibers[i * self.dims.1 + j];
                if fiber.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in fiber {
                    out[*k] += &(&c * t);
                }
            }
        }
        out
    }
}
