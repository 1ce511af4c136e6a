//! Exact computations with quantum symmetric pairs.
//!
//! The crate builds the coideal subalgebras `B` of `U_q(g)` attached to the
//! maximally split involutions of the simple Lie algebras, computes their
//! spherical vectors in simple modules `L(lambda)` and the associated zonal
//! spherical functions, and checks the structural statements about them
//! (spherical census, support lattices, triangularity, Weyl invariance,
//! generator relations) in exact arithmetic.
//!
//! Layers, bottom up:
//!
//! * [`qfield`]: canonical rational functions in `v` (`q = v^2`) and the
//!   pair parameters.
//! * [`linalg`]: sparse matrices and exact elimination over any [`Field`].
//! * [`rootdata`]: root systems, the involution table, restricted roots and
//!   the lattices attached to them.
//! * [`uqrep`]: simple modules `L(lambda)` as matrices, tensor products and
//!   the right adjoint action.
//! * [`qsp`]: the generators of the coideal subalgebras and the relation
//!   verifier.
//! * [`spherical`]: spherical vectors, dual invariants and zonal functions.
//! * [`charring`]: Weyl-invariant characters, orbit sums and the lattice
//!   character action.

pub mod charring;
pub mod error;
pub mod field;
pub mod linalg;
pub mod qfield;
pub mod qsp;
pub mod rootdata;
pub mod spherical;
pub mod uqrep;

pub use error::{Error, Result};
pub use field::{Field, Specialize};

/// Exact symbolic scalar.
pub type Scalar = qfield::RatFunc;
/// Rational numbers, the scalar type after full specialization.
pub type Rational = num_rational::BigRational;
