//! Representation theory of one tower level without semisimplicity
//! assumptions: radical, blocks, simple/projective dimensions, branching
//! multiplicities and Jucys-Murphy eigenvalue coordinates.

pub mod blocks;
pub mod branching;
pub mod eigen;
pub mod level;

pub use blocks::{conjugate_primitive, BlockData, BlockDecomposition};
pub use branching::BranchingTable;
pub use eigen::EigenvalueTable;
pub use level::LevelData;
