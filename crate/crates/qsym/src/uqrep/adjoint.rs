//! The right adjoint action on operators.
//!
//! With `sigma(x_i) = -t_i^-1 x_i` and `sigma(y_i) = -y_i t_i` the right
//! adjoint action `(ad_r a) b = sum sigma(a_(1)) b a_(2)` of the generators
//! reads
//!
//! * `(ad_r x_i) A = -t_i^-1 x_i A + t_i^-1 A x_i`,
//! * `(ad_r y_i) A = A y_i - y_i t_i A t_i^-1`,
//! * `(ad_r t_i) A = t_i^-1 A t_i`.

use crate::field::Field;
use crate::qfield::gauss_factorial;

use super::module::{ModuleRep, Operator};

/// `(ad_r x_i^(m)) A`, the `m`-fold action divided by `[m]_{q_i}!`.
pub fn ad_r_x<F: Field>(m: &ModuleRep<F>, i: usize, power: u32, a: &Operator<F>) -> Operator<F> {
    let t_inv = m.t_pow(i, -1);
    let tx = &t_inv * m.x(i);
    let mut acc = a.clone();
    for _ in 0..power {
        let left = &tx * &acc;
        let right = &(&t_inv * &acc) * m.x(i);
        acc = &right - &left;
    }
    divide(m, i, power, acc)
}

/// `(ad_r y_i^(m)) A`, the `m`-fold action divided by `[m]_{q_i}!`.
pub fn ad_r_y<F: Field>(m: &ModuleRep<F>, i: usize, power: u32, a: &Operator<F>) -> Operator<F> {
    let t = m.t_pow(i, 1);
    let t_inv = m.t_pow(i, -1);
    let yt = m.y(i) * &t;
    let mut acc = a.clone();
    for _ in 0..power {
        let right = &acc * m.y(i);
        let left = &(&yt * &acc) * &t_inv;
        acc = &right - &left;
    }
    divide(m, i, power, acc)
}

/// `(ad_r t_i^e) A = t_i^-e A t_i^e`.
pub fn ad_r_t<F: Field>(m: &ModuleRep<F>, i: usize, e: i64, a: &Operator<F>) -> Operator<F> {
    &(&m.t_pow(i, -e) * a) * &m.t_pow(i, e)
}

fn divide<F: Field>(m: &ModuleRep<F>, i: usize, power: u32, acc: Operator<F>) -> Operator<F> {
    if power <= 1 {
        return acc;
    }
    let f = gauss_factorial(m.v(), power, m.root().d(i));
    acc.scale(&f.inv().expect("quantum factorial is nonzero"))
}
