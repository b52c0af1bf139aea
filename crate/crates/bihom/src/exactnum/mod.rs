//! Exact field arithmetic over Q, F_p and Q(q).

mod parse;
mod poly;
mod ratfun;
mod scalar;

pub use num_rational::BigRational as Rational;
pub use parse::{parse_poly, parse_rational_function, parse_scalar};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use scalar::{axpy, Field, PrimeFieldElement, Scalar};

use crate::error::Result;

/// Reduces `n / d` to its canonical form.
pub fn rf_normalize(n: Poly, d: Poly) -> Result<RationalFunction> {
    RationalFunction::new(n, d)
}

/// The quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)` for any integer `n`.
pub fn q_integer(n: i64) -> RationalFunction {
    let q = RationalFunction::q();
    let num = q
        .pow(n)
        .expect("q is invertible")
        .sub(&q.pow(-n).expect("q is invertible"));
    let den = q.sub(&q.inv().expect("q is invertible"));
    num.div(&den).expect("q - 1/q is nonzero")
}
