//! Exact arithmetic: rational polynomials, matrices, number fields and factorization.

pub mod factor;
pub mod field;
pub mod matrix;
pub mod poly;

pub type Rational = num_rational::BigRational;

pub use factor::{factor_over_rationals, Factor, Factorization};
pub use field::{multiquadratic, quadratic_roots, AlgebraicScalar, NumberField};
pub use matrix::{ExactMatrix, FieldMatrix, Matrix, Scalar};
pub use poly::Poly;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
