//! Quantum symmetric pair coideal subalgebras: parameters, generators on
//! modules, invariance systems and relation checks.

mod generators;
mod presentation;
mod relations;
mod spec;

pub use generators::{twist_exponent, PairOps};
pub use presentation::{t_theta_basis, twist_exponents, CoidealPresentation, ShiftedGenerator};
pub use relations::{
    all_zero, residual, standard_battery, verify_all, verify_relation, Relation, RelationReport,
};
pub use spec::PairSpec;

#[cfg(test)]
mod tests;
