//! Root systems, the involution table, restricted roots and the lattices
//! attached to a symmetric pair.

mod datum;
mod involution;
mod restricted;
mod weight;

pub use datum::{CartanType, RootDatum};
pub use involution::{table, AdFactor, InvolutionDatum, PairType};
pub use restricted::RestrictedData;
pub use weight::WeightVec;

