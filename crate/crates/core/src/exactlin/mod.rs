//! Exact scalar arithmetic and exact dense linear algebra.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod split;

pub use matrix::{kernel_basis, rank, solve, Matrix, SpanBuilder};
pub use poly::{minimal_polynomial, roots_in_field, Poly};
pub use scalar::{Field, Scalar};
pub use split::split_commutative;
