//! Dense exact linear algebra.

mod matrix;
mod solve;
mod tensor;

use std::collections::HashMap;

pub use matrix::{mat_mul, Matrix};
pub use solve::{kernel, mat_inverse, rank, rref, solve, solve_unique, Solution};
pub use tensor::{bilinear_apply, Bilinear, Tensor3};

use crate::error::Result;
use crate::exactnum::{Field, Scalar};

/// Vectors are plain coordinate slices.
pub mod vector {
    use super::*;

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(field); n]
    }

    pub fn basis(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[i] = Scalar::one(field);
        v
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| c * x).collect()
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `a ⊗ b` in the row-major tensor basis.
    pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }

    /// Parses integer coordinates; for fixtures and tests.
    pub fn from_ints(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_i64(field, x)).collect()
    }
}

/// Memoized integer powers of one invertible square matrix.
#[derive(Clone, Debug)]
pub struct PowerCache {
    base: Matrix,
    inverse: Option<Matrix>,
    cache: HashMap<i64, Matrix>,
}

impl PowerCache {
    pub fn new(base: &Matrix) -> Self {
        PowerCache {
            base: base.clone(),
            inverse: None,
            cache: HashMap::new(),
        }
    }

    pub fn pow(&mut self, e: i64) -> Result<Matrix> {
        if let Some(m) = self.cache.get(&e) {
            return Ok(m.clone());
        }
        let m = if e == 0 {
            Matrix::identity(self.base.field(), self.base.rows())
        } else {
            let step = if e > 0 {
                self.base.clone()
            } else {
                if self.inverse.is_none() {
                    self.inverse = Some(self.base.inverse()?);
                }
                self.inverse.clone().expect("inverse computed")
            };
            let prev = self.pow(e - e.signum())?;
            &prev * &step
        };
        self.cache.insert(e, m.clone());
        Ok(m)
    }
}

/// A subspace given by independent basis columns, with fast coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    rows: Vec<usize>,
    left: Matrix,
}

impl Subspace {
    /// `basis` must have linearly independent columns.
    pub fn new(basis: Matrix) -> Self {
        // Pivot columns of the transpose are independent rows of the basis.
        let (_, rows) = rref(&basis.transpose());
        let r = basis.cols();
        assert_eq!(rows.len(), r, "subspace basis is not independent");
        let square = Matrix::from_fn(basis.field(), r, r, |i, j| basis.get(rows[i], j).clone());
        let left = square.inverse().expect("independent rows");
        Subspace { basis, rows, left }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of `v` in the basis, or `None` when `v` lies outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&i| v[i].clone()).collect();
        let c = self.left.apply(&picked);
        (self.basis.apply(&c) == v).then_some(c)
    }
}
