//! Finite-dimensional modules of `U_q(g)` as matrices: simple modules,
//! tensor products, the dual right action and the right adjoint action on
//! operators.

mod adjoint;
mod module;

pub use adjoint::{ad_r_t, ad_r_x, ad_r_y};
pub use module::{ModuleRep, Operator, DEFAULT_DIM_CAP};
pub(crate) use module::qint;

#[cfg(test)]
mod tests;
