//! Exact secant-plane counts for linear series on general curves, computed
//! from an intersection-theoretic formula and from lattice-path censuses on
//! elliptic chains.

pub mod algebra;
pub mod census;
pub mod chains;
pub mod cli;
pub mod error;
pub mod iecf;
pub mod macdonald;
pub mod plucker;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use algebra::{ExactInt, ExactRat};
pub use census::{count_r1, count_traversals_dp, enumerate_w, GridSpec, ProhibitionSequence};
pub use macdonald::{macdonald_general, macdonald_r1, macdonald_rs1, SecantParams, Version};
pub use plucker::{count_rs1, maximal_chains};
