//! Greatest common divisors of multivariate integer polynomials.
//!
//! The main path is the heuristic gcd: evaluate one symbol at a large
//! integer, recurse on the remaining symbols, reconstruct by symmetric
//! `x`-adic expansion, and confirm by trial division. A primitive
//! pseudo-remainder sequence serves as the fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::{Monomial, Poly};
use super::symbol::Symbol;

const HEU_ATTEMPTS: usize = 6;

/// The gcd of `a` and `b`, normalized to a positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let pa = a.div_monomial(&ma).div_int_exact(&ca);
    let pb = b.div_monomial(&mb).div_int_exact(&cb);
    gcd_primitive(&pa, &pb).mul_term(&m, &c)
}

/// Gcd of two nonzero polynomials with unit content and no monomial
/// content; the result has a positive leading coefficient.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return a.clone().normalize_sign();
    }
    let sa = a.symbols();
    let sb = b.symbols();
    if let Some(&x) = sa.iter().find(|s| !sb.contains(s)) {
        return gcd(&content_in(a, x), b);
    }
    if let Some(&x) = sb.iter().find(|s| !sa.contains(s)) {
        return gcd(a, &content_in(b, x));
    }
    if a.len() == 1 || b.len() == 1 {
        return Poly::one();
    }
    if let Some(h) = trial_small(a, b) {
        return h;
    }
    match heu_gcd(a, b) {
        Some((h, _, _)) => h.normalize_sign(),
        None => prs_gcd(a, b),
    }
}

/// Cheap exits: one operand divides the other.
fn trial_small(a: &Poly, b: &Poly) -> Option<Poly> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return Some(small.clone().normalize_sign());
    }
    None
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub fn content_in(p: &Poly, x: Symbol) -> Poly {
    let mut g = Poly::zero();
    for (_, c) in p.coeffs_in(x) {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn heu_gcd(f: &Poly, g: &Poly) -> Option<(Poly, Poly, Poly)> {
    if f.is_zero() || g.is_zero() {
        let h = if f.is_zero() { g } else { f };
        let h = h.clone().normalize_sign();
        let (cf, cg) = if f.is_zero() {
            (Poly::zero(), g.div_exact(&h)?)
        } else {
            (f.div_exact(&h)?, Poly::zero())
        };
        return Some((h, cf, cg));
    }
    let mut syms = f.symbols();
    syms.extend(g.symbols());
    syms.sort();
    syms.dedup();
    if syms.is_empty() {
        let fc = f.as_constant()?;
        let gc = g.as_constant()?;
        let h = fc.gcd(&gc);
        return Some((
            Poly::constant(h.clone()),
            Poly::constant(&fc / &h),
            Poly::constant(&gc / &h),
        ));
    }
    let content = f.content().gcd(&g.content());
    let f = f.div_int_exact(&content);
    let g = g.div_int_exact(&content);
    let x_sym = syms[0];
    let f_norm = f.max_norm();
    let g_norm = g.max_norm();
    let bound: BigInt = BigInt::from(2) * f_norm.clone().min(g_norm.clone()) + 29;
    let cand1 = bound.clone().min(BigInt::from(99) * bound.sqrt());
    let cand2 = BigInt::from(2) * (&f_norm / f.lc().abs()).min(&g_norm / g.lc().abs()) + 2;
    let mut xi = cand1.max(cand2);
    for _ in 0..HEU_ATTEMPTS {
        let ff = f.eval_int(x_sym, &xi);
        let gg = g.eval_int(x_sym, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some((h, cff, cfg)) = heu_gcd(&ff, &gg) {
                let h = interpolate(&h, &xi, x_sym);
                let h = h.div_int_exact(&h.content());
                if let Some(cf) = f.div_exact(&h) {
                    if let Some(cg) = g.div_exact(&h) {
                        return Some((h.scale(&content), cf, cg));
                    }
                }
                let cff = interpolate(&cff, &xi, x_sym);
                if let Some(h) = f.div_exact(&cff) {
                    if let Some(cg) = g.div_exact(&h) {
                        return Some((h.scale(&content), cff, cg));
                    }
                }
                let cfg = interpolate(&cfg, &xi, x_sym);
                if let Some(h) = g.div_exact(&cfg) {
                    if let Some(cf) = f.div_exact(&h) {
                        return Some((h.scale(&content), cf, cfg));
                    }
                }
            }
        }
        let root = xi.sqrt().sqrt();
        xi = BigInt::from(73794) * &xi * root / BigInt::from(27011);
    }
    None
}

/// Reconstructs a polynomial in `x` from its value at `x = xi` using the
/// symmetric `xi`-adic expansion of each coefficient.
fn interpolate(h: &Poly, xi: &BigInt, x: Symbol) -> Poly {
    let mut digits: Vec<(u32, Poly)> = Vec::new();
    let mut rest = h.clone();
    let mut k = 0u32;
    while !rest.is_zero() {
        let digit = rest.symmetric_mod(xi);
        rest = rest.sub(&digit).div_int_exact(xi);
        if !digit.is_zero() {
            digits.push((k, digit));
        }
        k += 1;
    }
    Poly::from_coeffs_in(x, &digits).normalize_sign()
}

/// Primitive part of `p` with respect to `x`, sign-normalized.
fn primitive_in(p: &Poly, x: Symbol) -> Poly {
    let c = content_in(p, x);
    p.div_exact(&c)
        .expect("content divides polynomial")
        .normalize_sign()
}

/// Pseudo-remainder of `p` by `q` as polynomials in `x`.
fn prem(p: &Poly, q: &Poly, x: Symbol) -> Poly {
    let dq = q.degree_in(x);
    let coeffs = q.coeffs_in(x);
    let lcq = coeffs[0].1.clone();
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(x) >= dq {
        let dr = r.degree_in(x);
        let lcr = r.coeffs_in(x)[0].1.clone();
        let shift = Poly::term(Monomial::var(x, dr - dq), BigInt::one());
        r = r.mul(&lcq).sub(&q.mul(&lcr).mul(&shift));
    }
    r
}

fn prs_gcd(a: &Poly, b: &Poly) -> Poly {
    let x = a.symbols()[0];
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(x) < q.degree_in(x) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.is_zero() {
            break;
        }
        if q.degree_in(x) == 0 {
            p = Poly::one();
            break;
        }
        let r = prem(&p, &q, x);
        p = q;
        q = if r.is_zero() {
            Poly::zero()
        } else {
            primitive_in(&r, x)
        };
    }
    primitive_in(&p, x).mul(&c).normalize_sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> Poly {
        Poly::var(Symbol::named(name).unwrap(), 1)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn univariate() {
        let v = sym("v");
        let a = v.pow(4).sub(&c(1));
        let b = v.pow(6).sub(&c(1));
        assert_eq!(gcd(&a, &b), v.pow(2).sub(&c(1)));
    }

    #[test]
    fn multivariate_common_factor() {
        let (v, s, d) = (sym("v"), sym("s1"), sym("d1"));
        let f = v.mul(&s).add(&d).sub(&c(3));
        let g1 = v.pow(2).add(&s.mul(&d)).add(&c(1));
        let g2 = s.pow(2).sub(&v.mul(&d)).add(&c(7));
        let a = f.mul(&g1).scale(&BigInt::from(6));
        let b = f.mul(&g2).scale(&BigInt::from(4));
        let expected = f.scale(&BigInt::from(2)).normalize_sign();
        assert_eq!(gcd(&a, &b), expected);
        let pa = a.div_int_exact(&a.content());
        let pb = b.div_int_exact(&b.content());
        assert_eq!(prs_gcd(&pa, &pb), f.clone().normalize_sign());
    }

    #[test]
    fn coprime_and_monomial_content() {
        let (v, s) = (sym("v"), sym("s1"));
        let a = v.pow(3).mul(&s.add(&c(1)));
        let b = v.pow(2).mul(&s.sub(&c(1)));
        assert_eq!(gcd(&a, &b), v.pow(2));
    }
}
