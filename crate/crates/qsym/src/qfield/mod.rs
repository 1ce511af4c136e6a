//! Exact scalars: rational functions over the rationals in the deformation
//! symbol `v` (with `q = v^2`) and the pair parameters.

mod gcd;
mod poly;
mod ratfunc;
mod symbol;

pub use gcd::gcd;
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use symbol::{ParamKind, Symbol, MAX_PARAM_NODE};

use crate::field::Field;

/// `q_i^k = v^(2 d k)` for a node with symmetrizer `d`, evaluated at the
/// value `v` of the deformation symbol.
pub fn q_node_pow<F: Field>(v: &F, d: i64, k: i64) -> F {
    v.powi(2 * d * k).expect("deformation value is nonzero")
}

/// The quantum integer `[m]_{q_i} = (q_i^m - q_i^-m) / (q_i - q_i^-1)` for a
/// node with symmetrizer `d`, written as the Laurent sum
/// `sum_k q_i^(m-1-2k)`.
pub fn gauss<F: Field>(v: &F, m: u32, d: i64) -> F {
    let mut acc = F::zero();
    for k in 0..m as i64 {
        acc += &q_node_pow(v, d, m as i64 - 1 - 2 * k);
    }
    acc
}

/// The quantum factorial `[m]_{q_i}! = [1][2]...[m]`.
pub fn gauss_factorial<F: Field>(v: &F, m: u32, d: i64) -> F {
    let mut acc = F::one();
    for k in 1..=m {
        acc *= &gauss(v, k, d);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn quantum_integers() {
        let v = RatFunc::v();
        assert!(gauss(&v, 0, 1).is_zero());
        assert!(gauss(&v, 1, 1).is_one());
        let q = RatFunc::parse("v^2").unwrap();
        let q_inv = RatFunc::parse("v^-2").unwrap();
        assert_eq!(gauss(&v, 2, 1), q.clone() + &q_inv);
        assert_eq!(gauss_factorial(&v, 2, 1), q + &q_inv);
        // Closed form for [3]_{q^2}.
        let closed = RatFunc::parse("(v^12-v^-12)/(v^4-v^-4)").unwrap();
        assert_eq!(gauss(&v, 3, 2), closed);
    }
}
