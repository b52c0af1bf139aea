//! Seeded random associative algebras with commuting endomorphism pairs.
//!
//! Each sample starts from a classical algebra whose endomorphisms are
//! known in closed form and then hides the basis by a random change of
//! coordinates, so the structure constants are dense and unremarkable.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BiHomAlgebra;
use crate::error::Result;
use crate::exactnum::{Field, Scalar};
use crate::linalg::{vector, Matrix, Tensor3};
use crate::maps::{default_labels, precompose};

use super::{cyclic_power, truncated_polynomials, truncated_power_map};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An associative unital algebra (identity structure maps) and two commuting
/// algebra endomorphisms of it.
#[derive(Clone, Debug)]
pub struct TwistInput {
    pub algebra: BiHomAlgebra,
    pub alpha: Matrix,
    pub beta: Matrix,
}

fn small_nonzero(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let c = Scalar::from_i64(field, rng.gen_range(-3..=3));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random invertible matrix with small integer entries.
pub fn invertible(rng: &mut impl Rng, field: Field, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| Scalar::from_i64(field, rng.gen_range(-2..=2)));
        if m.is_invertible() {
            return m;
        }
    }
}

/// Transports all structure to the basis given by the columns of `p`.
pub fn change_basis(a: &BiHomAlgebra, p: &Matrix) -> Result<BiHomAlgebra> {
    let pi = p.inverse()?;
    let moved = precompose(&a.mu, p, p);
    let (d, _, _) = moved.dims();
    let mut mu = Tensor3::zeros(a.field(), d, d, d);
    for i in 0..d {
        for j in 0..d {
            mu.set_fiber(i, j, &pi.apply(moved.fiber(i, j)));
        }
    }
    BiHomAlgebra::new(
        a.labels.clone(),
        mu,
        &(&pi * &a.alpha) * p,
        &(&pi * &a.beta) * p,
        a.unit.as_ref().map(|u| pi.apply(u)),
    )
}

fn conjugate(m: &Matrix, p: &Matrix) -> Matrix {
    let pi = p.inverse().expect("invertible");
    &(&pi * m) * p
}

/// Unital associative algebra of `n×n` upper triangular matrices for `n = 2`
/// (basis `E11, E12, E22`) or all `2×2` matrices (basis `E11, E12, E21, E22`).
fn matrix_units(field: Field, full: bool) -> BiHomAlgebra {
    let units: Vec<(usize, usize)> = if full {
        vec![(0, 0), (0, 1), (1, 0), (1, 1)]
    } else {
        vec![(0, 0), (0, 1), (1, 1)]
    };
    let d = units.len();
    let mu = Tensor3::from_fn(field, (d, d, d), |i, j, k| {
        let ((a, b), (c, e)) = (units[i], units[j]);
        if b == c && units[k] == (a, e) {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let unit: Vec<Scalar> = units
        .iter()
        .map(|&(r, c)| {
            if r == c {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
        .collect();
    let id = Matrix::identity(field, d);
    BiHomAlgebra::new(default_labels(d), mu, id.clone(), id, Some(unit)).expect("consistent shapes")
}

/// Conjugation by `diag(1, t)` on matrix units: `E_rs ↦ t^{s−r} E_rs`.
fn diagonal_conjugation(field: Field, full: bool, t: &Scalar) -> Matrix {
    let ti = t.inv().expect("nonzero");
    let one = Scalar::one(field);
    let diag = if full {
        vec![one.clone(), t.clone(), ti, one]
    } else {
        vec![one.clone(), t.clone(), one]
    };
    Matrix::diagonal(field, &diag)
}

/// `n`-fold product `𝕜^n` with componentwise multiplication.
fn diagonal_algebra(field: Field, n: usize) -> BiHomAlgebra {
    let mu = Tensor3::from_fn(field, (n, n, n), |i, j, k| {
        if i == j && j == k {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    BiHomAlgebra::associative(mu, Some(vec![Scalar::one(field); n])).expect("consistent shapes")
}

fn cycle_power(field: Field, n: usize, k: usize) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| vector::basis(field, n, (j + k) % n)).collect();
    Matrix::from_columns(field, n, &cols)
}

/// `a ↦ a_i · 1` on `𝕜^n`.
fn coordinate_projection(field: Field, n: usize, i: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |_, c| {
        if c == i {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

/// Draws an associative algebra of dimension at most `max_dim` (at least 1)
/// with two commuting endomorphisms. With `invertible` set, both maps are
/// automorphisms.
pub fn associative_with_maps(rng: &mut impl Rng, field: Field, max_dim: usize, invertible_maps: bool) -> TwistInput {
    let max_dim = max_dim.max(1);
    let mut kinds = vec![0, 1, 4];
    if max_dim >= 3 {
        kinds.push(2);
    }
    if max_dim >= 4 {
        kinds.push(3);
    }
    let kind = *kinds.choose(rng).expect("nonempty");
    let (base, alpha, beta) = match kind {
        0 => {
            let n = rng.gen_range(1..=max_dim);
            let a = super::group_algebra(field, n).bialgebra.algebra();
            let pick = |rng: &mut dyn rand::RngCore| loop {
                let k = rng.gen_range(0..n.max(1) as i64);
                if !invertible_maps || num_integer::gcd(k, n as i64) == 1 {
                    return cyclic_power(field, n, k);
                }
            };
            let (x, y) = (pick(rng), pick(rng));
            (a, x, y)
        }
        1 => {
            let n = rng.gen_range(1..=max_dim);
            let a = truncated_polynomials(field, n);
            if invertible_maps || rng.gen_bool(0.5) {
                let scale = |c: &Scalar| {
                    let diag: Vec<Scalar> = (0..n).map(|k| c.pow(k as i64).expect("nonzero")).collect();
                    Matrix::diagonal(field, &diag)
                };
                let (c1, c2) = (small_nonzero(rng, field), small_nonzero(rng, field));
                (a, scale(&c1), scale(&c2))
            } else {
                // Power maps X ↦ X^k commute; k = n gives the augmentation.
                let k1 = rng.gen_range(1..=n);
                let k2 = rng.gen_range(1..=n);
                (a, truncated_power_map(field, n, k1), truncated_power_map(field, n, k2))
            }
        }
        2 | 3 => {
            let full = kind == 3;
            let a = matrix_units(field, full);
            let t1 = small_nonzero(rng, field);
            let t2 = small_nonzero(rng, field);
            let x = diagonal_conjugation(field, full, &t1);
            let y = if !full && !invertible_maps && rng.gen_bool(0.3) {
                // Projection onto the E11 component, extended unitally.
                Matrix::from_columns(
                    field,
                    3,
                    &[
                        vector::from_ints(field, &[1, 0, 1]),
                        vector::zeros(field, 3),
                        vector::zeros(field, 3),
                    ],
                )
            } else {
                diagonal_conjugation(field, full, &t2)
            };
            (a, x, y)
        }
        _ => {
            let n = rng.gen_range(1..=max_dim);
            let a = diagonal_algebra(field, n);
            if !invertible_maps && rng.gen_bool(0.3) {
                let i = rng.gen_range(0..n);
                let p = coordinate_projection(field, n, i);
                let other = if rng.gen_bool(0.5) {
                    p.clone()
                } else {
                    Matrix::identity(field, n)
                };
                (a, p, other)
            } else {
                let k1 = rng.gen_range(0..n);
                let k2 = rng.gen_range(0..n);
                (a, cycle_power(field, n, k1), cycle_power(field, n, k2))
            }
        }
    };
    let p = invertible(rng, field, base.dim());
    let algebra = change_basis(&base, &p).expect("invertible change of basis");
    TwistInput {
        algebra,
        alpha: conjugate(&alpha, &p),
        beta: conjugate(&beta, &p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_bihom_algebra, yau_twist};

    #[test]
    fn samples_are_valid_twist_inputs() {
        let mut r = rng(7);
        for _ in 0..40 {
            let t = associative_with_maps(&mut r, Field::Rational, 4, false);
            assert!(check_bihom_algebra(&t.algebra).unwrap().passed());
            let tw = yau_twist(&t.algebra, &t.alpha, &t.beta).unwrap();
            assert!(
                check_bihom_algebra(&tw).unwrap().passed(),
                "{}",
                check_bihom_algebra(&tw).unwrap()
            );
        }
    }
}
