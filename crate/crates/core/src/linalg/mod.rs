//! Exact dense linear algebra over the rationals.

mod charpoly;
mod closure;
mod matrix;
mod subspace;

pub use charpoly::{characteristic_polynomial, rational_roots};
pub use closure::{cyclic_span, generated_algebra_dim, generated_algebra_dim_exact};
pub use matrix::{Matrix, Vector};
pub use subspace::{eigenspace, is_direct_sum, kernel, subspace_intersection, subspace_sum, EchelonBasis, Subspace};
