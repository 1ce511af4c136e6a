//! Random rational points for specializing symbols.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::qfield::Symbol;

const SLOTS: usize = 256;

/// A deterministic assignment of a random nonzero rational to every
/// symbol. The deformation symbol avoids `0` and `+-1`.
#[derive(Clone, Debug)]
pub struct Point {
    values: Vec<BigRational>,
}

impl Point {
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let values = (0..SLOTS)
            .map(|_| loop {
                let num: i64 = rng.gen_range(-97..=97);
                let den: i64 = rng.gen_range(1..=31);
                if num != 0 && num.abs() != den {
                    break BigRational::new(BigInt::from(num), BigInt::from(den));
                }
            })
            .collect();
        Point { values }
    }

    pub fn value(&self, sym: Symbol) -> BigRational {
        self.values[sym.0 as usize % SLOTS].clone()
    }

    /// The point as a symbol assignment.
    pub fn assignment(&self) -> impl Fn(Symbol) -> Option<BigRational> + '_ {
        move |s| Some(self.value(s))
    }
}
