//! Exact rational scalars, q-combinatorics and univariate polynomials.

mod poly;
mod qnum;
mod scalar;

pub use poly::Polynomial;
pub use qnum::{critical_value, qbracket, qdiff, qfactorial, qpow, validate_q};
pub use scalar::{cmp_abs, Scalar};

/// `poly_eval` under its contract name.
pub fn poly_eval(p: &Polynomial, z0: &Scalar) -> Scalar {
    p.eval(z0)
}

pub fn poly_mul(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1.mul(p2)
}
