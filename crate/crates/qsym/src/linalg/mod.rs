//! Exact linear algebra.
//!
//! [`SparseMatrix`] carries operators on modules. The elimination routines
//! in [`dense`] work over any [`crate::Field`]. The integer routines in
//! [`lattice`] compute saturated kernels and Smith invariants for the
//! lattices attached to root data.

pub mod dense;
pub mod lattice;
mod sparse;

pub use dense::{nullspace, rank, rref, solve, Rref};
pub use lattice::{integer_kernel, smith_invariants};
pub use sparse::SparseMatrix;
