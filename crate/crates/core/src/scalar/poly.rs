//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Multiplicity of `q` as a factor.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `q^k`; the low `k` coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> IntPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        IntPoly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        self.add_shifted(other, 0, 0, false)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add_shifted(other, 0, 0, true)
    }

    /// `self * q^a ± other * q^b`
    pub fn add_shifted(&self, other: &IntPoly, a: usize, b: usize, subtract: bool) -> IntPoly {
        let len = (self.coeffs.len() + a).max(other.coeffs.len() + b);
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + a] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            if subtract {
                out[i + b] -= c;
            } else {
                out[i + b] += c;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let top = r.pop().unwrap();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs[..dd].iter().enumerate() {
                r[i + k] -= &top * dc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly::from_coeffs(r)
    }

    /// Exact quotient `self / d` when `d` divides `self` in Z[q]; `None` otherwise.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if dd == 0 {
            let c = &d.coeffs[0];
            if self.coeffs.iter().all(|x| x.is_multiple_of(c)) {
                return Some(self.div_scalar(c));
            }
            return None;
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quo, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[i + k] -= &quo * dc;
            }
            q[k] = quo;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        self.div_scalar(&c)
    }

    /// Greatest common divisor in Z[q], normalised to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return IntPoly::constant(c);
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return IntPoly::constant(c);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale(&c)
    }

    /// Evaluate modulo the prime `p` at `x`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u128 = 0;
        for c in self.coeffs.iter().rev() {
            let cm = c.mod_floor(&pb);
            let cm: u64 = cm.try_into().unwrap();
            acc = (acc * x as u128 + cm as u128) % p as u128;
        }
        acc as u64
    }

    /// Reverse the coefficient list: `q^deg * p(1/q)`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    pub fn cmp_degree(&self, other: &IntPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_products() {
        // (q+1)(q-2) and (q+1)(q^2+3)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_content() {
        let a = p(&[4, 4]);
        let b = p(&[6, 6]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 6])), p(&[3]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn pseudo_remainder() {
        // 2q^2 + 1 by 2q + 1: 4*(2q^2+1) = (2q+1)(4q-2) + 6
        assert_eq!(p(&[1, 0, 2]).pseudo_rem(&p(&[1, 2])), p(&[6]));
    }

    #[test]
    fn modular_evaluation() {
        assert_eq!(p(&[-1, 0, 1]).eval_mod(3, 7), 1);
    }
}
