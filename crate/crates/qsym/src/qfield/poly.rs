//! Sparse distributed multivariate polynomials with integer coefficients.
//!
//! Terms are kept sorted in decreasing lexicographic order (the symbol with
//! the smallest index is the most significant), with no zero coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::symbol::Symbol;

/// A power product of symbols, stored as `(symbol, exponent)` pairs sorted
/// by symbol with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(u8, u32); 4]>);

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    /// `sym^exp`.
    pub fn var(sym: Symbol, exp: u32) -> Self {
        let mut m = SmallVec::new();
        if exp > 0 {
            m.push((sym.0, exp));
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `sym`.
    pub fn degree_in(&self, sym: Symbol) -> u32 {
        self.0
            .iter()
            .find(|(s, _)| *s == sym.0)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Symbols with positive exponent, in increasing order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|(s, _)| Symbol(*s))
    }

    /// `(symbol, exponent)` pairs in increasing symbol order.
    pub fn factors(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        self.0.iter().map(|(s, e)| (Symbol(*s), *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == s {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((s, e - f)),
                }
            } else {
                out.push((s, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(s, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < s {
                j += 1;
            }
            if j < other.0.len() && other.0[j].0 == s {
                out.push((s, e.min(other.0[j].1)));
            }
        }
        Monomial(out)
    }

    /// The monomial with `sym` removed.
    pub fn without(&self, sym: Symbol) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(s, _)| *s != sym.0).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => {
                    if sa != sb {
                        return if sa < sb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    /// `c * m`.
    pub fn term(m: Monomial, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// `sym^exp`.
    pub fn var(sym: Symbol, exp: u32) -> Self {
        Poly::term(Monomial::var(sym, exp), BigInt::one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True when the polynomial has no symbols (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value, for constant polynomials.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> BigInt {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Symbols occurring in the polynomial, increasing.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.terms.iter().flat_map(|(m, _)| m.symbols()).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn degree_in(&self, sym: Symbol) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(sym))
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree_in(&self, sym: Symbol) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(sym))
            .min()
            .unwrap_or(0)
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest absolute value of a coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Gcd of all monomials.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Negates if needed so that the leading coefficient is positive.
    pub fn normalize_sign(self) -> Poly {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.add_scaled(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add_scaled(other, true)
    }

    fn add_scaled(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if negate {
            out.extend(b[j..].iter().map(|(m, c)| (m.clone(), -c)));
        } else {
            out.extend(b[j..].iter().cloned());
        }
        Poly { terms: out }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), d * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(prods)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d / c)).collect(),
        }
    }

    /// Division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((m.div(dm)?, q));
            }
            return Some(Poly { terms: out });
        }
        for sym in d.symbols() {
            if d.degree_in(sym) > self.degree_in(sym) {
                return None;
            }
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = m.div(dm)?;
            let (qc, r) = c.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients as a polynomial in `sym`: pairs `(degree, coefficient)`
    /// with the coefficient free of `sym`, in decreasing degree.
    pub fn coeffs_in(&self, sym: Symbol) -> Vec<(u32, Poly)> {
        let mut buckets: Vec<(u32, Vec<(Monomial, BigInt)>)> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.degree_in(sym);
            let rest = m.without(sym);
            match buckets.iter_mut().find(|(d, _)| *d == e) {
                Some((_, v)) => v.push((rest, c.clone())),
                None => buckets.push((e, vec![(rest, c.clone())])),
            }
        }
        let mut out: Vec<(u32, Poly)> = buckets
            .into_iter()
            .map(|(e, ts)| (e, Poly::from_terms(ts)))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(sym: Symbol, coeffs: &[(u32, Poly)]) -> Poly {
        let mut terms = Vec::new();
        for (e, p) in coeffs {
            let m = Monomial::var(sym, *e);
            for (t, c) in &p.terms {
                terms.push((t.mul(&m), c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Substitutes the integer `x` for `sym`.
    pub fn eval_int(&self, sym: Symbol, x: &BigInt) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        let mut powers: Vec<BigInt> = vec![BigInt::one()];
        for (m, c) in &self.terms {
            let e = m.degree_in(sym) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * x;
                powers.push(next);
            }
            terms.push((m.without(sym), c * &powers[e]));
        }
        Poly::from_terms(terms)
    }

    /// Evaluates at rational values supplied per symbol. Symbols for which
    /// `value` returns `None` are kept.
    pub fn eval_partial(&self, value: &dyn Fn(Symbol) -> Option<BigRational>) -> (Poly, BigInt) {
        // Returns (numerator polynomial, positive common denominator).
        let mut rat_terms: Vec<(Monomial, BigRational)> = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = BigRational::from_integer(c.clone());
            let mut kept = Monomial::one();
            for (s, e) in m.factors() {
                match value(s) {
                    Some(x) => coeff *= num_traits::pow(x, e as usize),
                    None => kept = kept.mul(&Monomial::var(s, e)),
                }
            }
            rat_terms.push((kept, coeff));
        }
        let mut den = BigInt::one();
        for (_, c) in &rat_terms {
            den = den.lcm(c.denom());
        }
        let terms = rat_terms
            .into_iter()
            .map(|(m, c)| (m, c.numer() * (&den / c.denom())))
            .collect();
        (Poly::from_terms(terms), den)
    }

    /// Symmetric residue of every coefficient modulo `x`.
    pub fn symmetric_mod(&self, x: &BigInt) -> Poly {
        let half = x >> 1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut r = c.mod_floor(x);
                if r > half {
                    r -= x;
                }
                (m.clone(), r)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { terms }
    }

    /// Formats with `^` powers and `*` between factors.
    pub fn to_string_with_parens(&self) -> String {
        let s = self.to_string();
        if self.terms.len() > 1 {
            format!("({s})")
        } else {
            s
        }
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    m.factors()
        .map(|(s, e)| {
            if e == 1 {
                s.name()
            } else {
                format!("{}^{}", s.name(), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&fmt_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Poly {
        Poly::var(Symbol::V, 1)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn lex_order_puts_v_first() {
        let s = Symbol::named("s1").unwrap();
        let a = Monomial::var(Symbol::V, 1);
        let b = Monomial::var(s, 5);
        assert!(a > b);
        assert!(a.mul(&b) > a);
    }

    #[test]
    fn exact_division() {
        let p = v().pow(4).sub(&c(1));
        let d = v().pow(2).sub(&c(1));
        assert_eq!(p.div_exact(&d).unwrap(), v().pow(2).add(&c(1)));
        assert!(p.div_exact(&v().add(&c(2))).is_none());
    }

    #[test]
    fn display() {
        let p = v().pow(2).scale(&BigInt::from(3)).sub(&c(1));
        assert_eq!(p.to_string(), "3*v^2-1");
    }
}
