//! Canonical rational functions over the rationals.
//!
//! A [`RatFunc`] is stored as `num / den` with integer-coefficient
//! polynomials, `gcd(num, den) = 1` (integer content included) and a
//! positive leading coefficient of `den`. Zero is `0 / 1`. Structural
//! equality therefore coincides with equality of rational functions.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::Poly;
use super::symbol::Symbol;
use crate::error::{Error, Result};
use crate::field::Field;

/// An element of the rational function field `Q(v, parameters)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

fn gcd_fast(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    gcd(a, b)
}

impl RatFunc {
    /// `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = gcd_fast(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: Poly, den: Poly) -> RatFunc {
        if den.lc().is_negative() {
            RatFunc {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            RatFunc { num, den }
        }
    }

    /// A polynomial as a rational function.
    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFunc {
        Self::from_poly(Poly::constant(BigInt::from(n)))
    }

    /// The symbol itself.
    pub fn symbol(sym: Symbol) -> RatFunc {
        Self::from_poly(Poly::var(sym, 1))
    }

    /// The deformation symbol `v`.
    pub fn v() -> RatFunc {
        Self::symbol(Symbol::V)
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> RatFunc {
        let m = Poly::var(Symbol::V, k.unsigned_abs() as u32);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `q^k = v^(2k)` for a half-integer `k`.
    pub fn q_power(k: &BigRational) -> Result<RatFunc> {
        let twice = k * BigRational::from_integer(BigInt::from(2));
        if !twice.is_integer() {
            return Err(Error::NonHalfIntegerExponent(k.to_string()));
        }
        let e: i64 = twice
            .to_integer()
            .try_into()
            .map_err(|_| Error::NonHalfIntegerExponent(k.to_string()))?;
        Ok(Self::v_pow(e))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number when no symbol occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// Symbols occurring in numerator or denominator.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s.sort();
        s.dedup();
        s
    }

    /// Symbols occurring in the denominator.
    pub fn denominator_symbols(&self) -> Vec<Symbol> {
        self.den.symbols()
    }

    /// Checked division.
    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc> {
        let inv = other.try_inv()?;
        Ok(self.mul_ref(&inv))
    }

    /// Checked inverse.
    pub fn try_inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    fn add_ref(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd_fast(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc {
                num,
                den: self.den.mul(&other.den),
            };
        }
        let ad = self.den.div_exact(&g).expect("gcd divides");
        let bd = other.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&bd).add(&other.num.mul(&ad));
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd_fast(&t, &g);
        let num = t.div_exact(&g2).expect("gcd divides");
        let den = ad.mul(&other.den.div_exact(&g2).expect("gcd divides"));
        Self::fix_sign(num, den)
    }

    fn neg_ref(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul_ref(&self, other: &RatFunc) -> RatFunc {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = gcd_fast(&self.num, &other.den);
        let g2 = gcd_fast(&other.num, &self.den);
        let an = self.num.div_exact(&g1).expect("gcd divides");
        let bd = other.den.div_exact(&g1).expect("gcd divides");
        let bn = other.num.div_exact(&g2).expect("gcd divides");
        let ad = self.den.div_exact(&g2).expect("gcd divides");
        Self::fix_sign(an.mul(&bn), ad.mul(&bd))
    }

    /// Evaluates every symbol; errors at a pole or when a symbol is missing.
    pub fn eval(&self, value: &dyn Fn(Symbol) -> Option<BigRational>) -> Result<BigRational> {
        let sub = self.subs(value)?;
        sub.as_rational()
            .ok_or_else(|| Error::Invalid(format!("unassigned symbol in {self}")))
    }

    /// Substitutes rational values for the symbols on which `value` returns
    /// `Some`; errors when the denominator vanishes.
    pub fn subs(&self, value: &dyn Fn(Symbol) -> Option<BigRational>) -> Result<RatFunc> {
        let (n, nd) = self.num.eval_partial(value);
        let (d, dd) = self.den.eval_partial(value);
        if d.is_zero() {
            return Err(Error::Pole(self.to_string()));
        }
        // num/den = (n/nd) / (d/dd) = (n*dd) / (d*nd)
        Ok(Self::reduce(n.scale(&dd), d.scale(&nd)))
    }

    /// Number of terms, used as a pivot-size heuristic.
    pub fn term_count(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Parses the grammar produced by `Display`: sums, products, quotients,
    /// integer powers, integers and symbol names, with parentheses.
    pub fn parse(input: &str) -> Result<RatFunc> {
        let mut p = Parser {
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let r = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("trailing input in `{input}`")));
        }
        Ok(r)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if c == '+' || c == '-' {
                self.pos += 1;
                let t = self.term()?;
                acc = if c == '+' { acc + &t } else { acc - &t };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if c == '*' || c == '/' {
                self.pos += 1;
                let f = self.factor()?;
                acc = if c == '*' { acc * &f } else { acc.try_div(&f)? };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            return base
                .powi(if neg { -e } else { e })
                .ok_or(Error::DivisionByZero);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&s).map_err(|e| Error::Parse(e.to_string()))
    }

    fn primary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::from_poly(Poly::constant(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(RatFunc::symbol(Symbol::named(&name)?))
            }
            _ => Err(Error::Parse(format!("unexpected input at {}", self.pos))),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let den = self.den.to_string();
            let den = if self.den.len() > 1 || den.contains('*') {
                format!("({den})")
            } else {
                den
            };
            write!(f, "{}/{den}", self.num.to_string_with_parens())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<RatFunc> {
        RatFunc::parse(s)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(&self, rhs)
            }
        }
        impl<'a, 'b> $trait<&'a RatFunc> for &'b RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_ref(b));
binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_ref(b));

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::try_div`] to handle it.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero")
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = self.mul_ref(rhs);
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn from_rational(r: &BigRational) -> Self {
        RatFunc::fix_sign(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        self.try_div(other).ok()
    }

    fn powi(&self, e: i64) -> Option<Self> {
        if e < 0 && self.num.is_zero() {
            return None;
        }
        let n = e.unsigned_abs() as u32;
        let (num, den) = (self.num.pow(n), self.den.pow(n));
        Some(if e >= 0 {
            RatFunc { num, den }
        } else {
            RatFunc::fix_sign(den, num)
        })
    }

    fn size_hint(&self) -> usize {
        self.term_count()
    }
}
