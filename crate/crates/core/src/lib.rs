//! Exact-arithmetic engine for free Frobenius towers.
//!
//! The crate builds towers of finite-dimensional algebras (symmetric group
//! algebras, degenerate cyclotomic Hecke algebras, wreath products over a
//! Frobenius algebra), equips every step with an explicit Frobenius system
//! (conditional expectation plus dual bases), computes representation data
//! without assuming semisimplicity (radical, blocks, simple and projective
//! dimensions, branching multiplicities), and realizes the two coherent
//! probability systems living on the branching graphs, including the
//! central-element identities that tie moments of transition measures to
//! Frobenius trace computations.
//!
//! All arithmetic is exact over ℚ or ℚ(i); probabilities stay rational end
//! to end, and every identity is checked with zero tolerance.

pub mod algebra;
pub mod coherent;
pub mod engine;
pub mod error;
pub mod exactlin;
pub mod exec;
pub mod repn;
pub mod towers;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use exactlin::{Field, Scalar};
