use crate::error::{Error, Result};
use crate::exactnum::Scalar;

use super::matrix::Matrix;

/// Reduced row echelon form and the pivot column of each nonzero row.
///
/// Gauss-Jordan elimination taking the first nonzero entry as pivot.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Scalar>> = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = Matrix::from_rows(a.field(), m).unwrap_or_else(|_| Matrix::zeros(a.field(), rows, cols));
    (out, pivots)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

/// Basis of `{v : a v = 0}`, one vector per free column.
pub fn kernel(a: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(a);
    let field = a.field();
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(field); a.cols()];
            v[f] = Scalar::one(field);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            v
        })
        .collect()
}

/// Solution set `particular + span(kernel)` of a consistent linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Solves `a x = b`; fails with `Inconsistent` when there is no solution.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Solution> {
    if b.len() != a.rows() {
        return Err(Error::shape("right-hand side length differs from row count"));
    }
    let n = a.cols();
    let aug = Matrix::from_fn(a.field(), a.rows(), n + 1, |r, c| {
        if c < n {
            a.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Err(Error::Inconsistent);
    }
    let mut particular = vec![Scalar::zero(a.field()); n];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(row, n).clone();
    }
    Ok(Solution {
        particular,
        kernel: kernel(a),
    })
}

/// Solves `a x = b`, requiring exactly one solution.
pub fn solve_unique(a: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let s = solve(a, b)?;
    if s.is_unique() {
        Ok(s.particular)
    } else {
        Err(Error::NonUnique(s.kernel.len()))
    }
}

impl Matrix {
    /// Exact inverse; `Singular` carries the rank when there is none.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::shape("inverse of a non-square matrix"));
        }
        let n = self.rows();
        let aug = Matrix::from_fn(self.field(), n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one(self.field())
            } else {
                Scalar::zero(self.field())
            }
        });
        let (red, pivots) = rref(&aug);
        let rank = pivots.iter().take_while(|&&p| p < n).count();
        if rank < n {
            return Err(Error::Singular { rank, size: n });
        }
        Ok(Matrix::from_fn(self.field(), n, n, |r, c| red.get(r, n + c).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && rank(self) == self.rows()
    }
}

/// Exact inverse of a square matrix.
pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Field;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_i64(Q, x)).collect()
    }

    #[test]
    fn inverse_examples() {
        assert!(Matrix::identity(Q, 3).inverse().unwrap().is_identity());
        let d = Matrix::from_ints(Q, &[&[2, 0], &[0, 3]]);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &Scalar::ratio(Q, 1, 2).unwrap());
        assert_eq!(inv.get(1, 1), &Scalar::ratio(Q, 1, 3).unwrap());
        let u = Matrix::from_ints(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(u.inverse().unwrap(), Matrix::from_ints(Q, &[&[1, -1], &[0, 1]]));
        let s = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular { rank: 1, size: 2 })));
    }

    #[test]
    fn kernel_of_one_relation() {
        let a = Matrix::from_ints(Q, &[&[1, 1]]);
        assert_eq!(kernel(&a), vec![v(&[-1, 1])]);
    }

    #[test]
    fn solve_modes() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(solve_unique(&id, &v(&[1, 2, 3])).unwrap(), v(&[1, 2, 3]));
        let a = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert!(matches!(solve(&a, &v(&[1, 2])), Err(Error::Inconsistent)));
        let s = solve(&a, &v(&[2, 2])).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(a.apply(&s.particular), v(&[2, 2]));
    }
}
