//! Exact arithmetic in the rational function field Q(q).
//!
//! A value is stored as `q^shift * numerator / denominator` with integer
//! polynomials whose constant terms are non-zero, so all powers of `q` live in
//! the shift. Numerator and denominator are coprime in Z[q] (content
//! included) and the denominator has a positive leading coefficient. Two
//! values are equal exactly when their stored parts are equal.

pub mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::parse::{self, ExprAlgebra};
pub use poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
    shift: i64,
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: IntPoly::zero(), den: IntPoly::one(), shift: 0 }
    }

    pub fn one() -> Self {
        RationalFunction::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RationalFunction::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction { num: IntPoly::constant(c), den: IntPoly::one(), shift: 0 }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RationalFunction::q_pow(1)
    }

    pub fn q_pow(k: i64) -> Self {
        RationalFunction { num: IntPoly::one(), den: IntPoly::one(), shift: k }
    }

    /// `c * q^k`
    pub fn monomial(c: i64, k: i64) -> Self {
        if c == 0 {
            return RationalFunction::zero();
        }
        RationalFunction { num: IntPoly::from_i64s(&[c]), den: IntPoly::one(), shift: k }
    }

    /// The Laurent polynomial `q^shift * p`.
    pub fn from_laurent(p: IntPoly, shift: i64) -> Self {
        RationalFunction::from_parts(p, IntPoly::one(), shift)
    }

    /// `q^shift * num / den`, brought to canonical form.
    pub fn new(num: IntPoly, den: IntPoly, shift: i64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::from_parts(num, den, shift))
    }

    fn from_parts(mut num: IntPoly, mut den: IntPoly, mut shift: i64) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let vn = num.valuation();
        if vn > 0 {
            num = num.shift_down(vn);
            shift += vn as i64;
        }
        let vd = den.valuation();
        if vd > 0 {
            den = den.shift_down(vd);
            shift -= vd as i64;
        }
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
            if den.leading().unwrap().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        RationalFunction { num, den, shift }
    }

    /// The q-integer `[n]_q = (q^n - q^-n) / (q - q^-1)`.
    pub fn qint(n: i64) -> Self {
        if n == 0 {
            return RationalFunction::zero();
        }
        let m = n.unsigned_abs() as usize;
        let mut cs = vec![BigInt::zero(); 2 * m - 1];
        let sign = if n > 0 { BigInt::one() } else { -BigInt::one() };
        for k in 0..m {
            cs[2 * k] = sign.clone();
        }
        RationalFunction { num: IntPoly::from_coeffs(cs), den: IntPoly::one(), shift: -(m as i64 - 1) }
    }

    /// `q^n + q^-n`
    pub fn q_sym(n: i64) -> Self {
        if n == 0 {
            return RationalFunction::from_int(2);
        }
        RationalFunction::q_pow(n) + RationalFunction::q_pow(-n)
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn laurent_shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial in `q`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True for `±q^k`, the units of Z[q, q^-1].
    pub fn is_signed_power(&self) -> bool {
        self.den.is_one() && self.num.coeffs().len() == 1 && self.num.coeffs()[0].magnitude().is_one()
    }

    /// Sign of the numerator's highest coefficient, used when rendering sums.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }

    /// Rough size measure used for pivot selection.
    pub fn complexity(&self) -> usize {
        let bits = |p: &IntPoly| p.coeffs().iter().map(|c| c.bits() as usize).sum::<usize>();
        self.num.coeffs().len() + self.den.coeffs().len() + (bits(&self.num) + bits(&self.den)) / 64
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den, shift: -self.shift })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RationalFunction::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The value at `1/q`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        let (mut num, mut den) = (self.num.reversed(), self.den.reversed());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den, shift: -self.shift - dn + dd }
    }

    /// Reduce modulo the prime `p` and evaluate at `q = x`; `None` when the
    /// denominator vanishes there.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let n = self.num.eval_mod(x, p);
        let d = self.den.eval_mod(x, p);
        if d == 0 {
            return None;
        }
        let xs = if self.shift >= 0 {
            pow_mod(x, self.shift as u64, p)
        } else {
            pow_mod(inv_mod(x, p)?, self.shift.unsigned_abs(), p)
        };
        Some(mul_mod(mul_mod(n, inv_mod(d, p)?, p), xs, p))
    }

    fn add_impl(&self, other: &Self, subtract: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -other } else { other.clone() };
        }
        let e = self.shift.min(other.shift);
        let a = (self.shift - e) as usize;
        let b = (other.shift - e) as usize;
        if self.den == other.den {
            let num = self.num.add_shifted(&other.num, a, b, subtract);
            if self.den.is_one() {
                return RationalFunction::from_parts(num, IntPoly::one(), e);
            }
            return RationalFunction::from_parts(num, self.den.clone(), e);
        }
        let n1 = self.num.mul(&other.den);
        let n2 = other.num.mul(&self.den);
        let num = n1.add_shifted(&n2, a, b, subtract);
        RationalFunction::from_parts(num, self.den.mul(&other.den), e)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction { num: self.num.mul(&other.num), den: IntPoly::one(), shift };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den, shift }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                let f: fn(&RationalFunction, &RationalFunction) -> RationalFunction = $body;
                f(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
// Panics on a zero divisor; use `checked_div` where that can happen.
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero in Q(q)"));

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &RationalFunction) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&RationalFunction> for RationalFunction {
    fn mul_assign(&mut self, rhs: &RationalFunction) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone(), shift: self.shift }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::from_int(c)
    }
}

fn fmt_laurent(p: &IntPoly, shift: i64) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 + shift;
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = c.magnitude();
        match (e, mag.is_one()) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, true) => {}
            (_, false) => {
                out.push_str(&mag.to_string());
                out.push('*');
            }
        }
        match e {
            0 => {}
            1 => out.push('q'),
            _ => {
                out.push_str("q^");
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

fn term_count(p: &IntPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl RationalFunction {
    /// True when the rendering is a single signed monomial and needs no parentheses.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && term_count(&self.num) <= 1
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let num = fmt_laurent(&self.num, self.shift);
        let num = if term_count(&self.num) > 1 { format!("({num})") } else { num };
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        let den = fmt_laurent(&self.den, 0);
        if term_count(&self.den) > 1 {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ExprAlgebra for RationalFunction {
    fn from_scalar(c: RationalFunction) -> Self {
        c
    }
    fn atom(_name: &str) -> Option<Self> {
        None
    }
    fn as_scalar(&self) -> Option<RationalFunction> {
        Some(self.clone())
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn sub(self, o: Self) -> Self {
        self - o
    }
    fn mul(self, o: Self) -> Self {
        self * o
    }
    fn scale(self, c: &RationalFunction) -> Self {
        self * c
    }
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_expr(s)
    }
}

impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
