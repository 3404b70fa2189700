//! Truncated power series in two commuting variables `s` and `t`.
//!
//! Coefficients live in any [`Ring`], so the same type carries the integer
//! dimension series and the operator-valued generating functions.

pub mod identities;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::scalar::RationalFunction;

pub use identities::{verify_gf_identity, Generating, GfIdentity, GfReport, ReductionFamily};

/// Coefficients of `s^m t^n` for `m <= ds`, `n <= dt`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    ds: usize,
    dt: usize,
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    pub fn zero(ds: usize, dt: usize) -> Self {
        TruncatedSeries { ds, dt, coeffs: vec![C::zero(); (ds + 1) * (dt + 1)] }
    }

    pub fn constant(ds: usize, dt: usize, c: C) -> Self {
        let mut out = Self::zero(ds, dt);
        out.coeffs[0] = c;
        out
    }

    pub fn from_fn(ds: usize, dt: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut coeffs = Vec::with_capacity((ds + 1) * (dt + 1));
        for m in 0..=ds {
            for n in 0..=dt {
                coeffs.push(f(m, n));
            }
        }
        TruncatedSeries { ds, dt, coeffs }
    }

    /// `Σ f(m) s^m`.
    pub fn in_s(ds: usize, dt: usize, mut f: impl FnMut(usize) -> C) -> Self {
        Self::from_fn(ds, dt, |m, n| if n == 0 { f(m) } else { C::zero() })
    }

    /// `Σ f(n) t^n`.
    pub fn in_t(ds: usize, dt: usize, mut f: impl FnMut(usize) -> C) -> Self {
        Self::from_fn(ds, dt, |m, n| if m == 0 { f(n) } else { C::zero() })
    }

    /// Truncation degrees `(ds, dt)`.
    pub fn bounds(&self) -> (usize, usize) {
        (self.ds, self.dt)
    }

    fn at(&self, m: usize, n: usize) -> usize {
        m * (self.dt + 1) + n
    }

    /// Coefficient of `s^m t^n`, or `None` beyond the truncation.
    pub fn get(&self, m: usize, n: usize) -> Option<&C> {
        (m <= self.ds && n <= self.dt).then(|| &self.coeffs[self.at(m, n)])
    }

    pub fn coeff(&self, m: usize, n: usize) -> &C {
        self.get(m, n).expect("coefficient beyond truncation")
    }

    pub fn set(&mut self, m: usize, n: usize, c: C) {
        let i = self.at(m, n);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Nonzero coefficients in `(m, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        let w = self.dt + 1;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (i / w, i % w, c))
    }

    pub fn truncate(&self, ds: usize, dt: usize) -> Self {
        let (ds, dt) = (ds.min(self.ds), dt.min(self.dt));
        Self::from_fn(ds, dt, |m, n| self.coeff(m, n).clone())
    }

    pub fn map<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { ds: self.ds, dt: self.dt, coeffs: self.coeffs.iter().map(&mut f).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let (ds, dt) = (self.ds.min(o.ds), self.dt.min(o.dt));
        Self::from_fn(ds, dt, |m, n| f(self.coeff(m, n), o.coeff(m, n)))
    }

    /// Multiply by `s^a t^b`, dropping what falls outside the box.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        Self::from_fn(
            self.ds,
            self.dt,
            |m, n| {
                if m >= a && n >= b {
                    self.coeff(m - a, n - b).clone()
                } else {
                    C::zero()
                }
            },
        )
    }

    /// Cauchy product; coefficient order is preserved for noncommutative rings.
    pub fn series_mul(&self, o: &Self) -> Self {
        let (ds, dt) = (self.ds.min(o.ds), self.dt.min(o.dt));
        let mut out = Self::zero(ds, dt);
        for a in 0..=ds {
            for b in 0..=dt {
                let x = self.coeff(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..=ds - a {
                    for d in 0..=dt - b {
                        let y = o.coeff(c, d);
                        if y.is_zero() {
                            continue;
                        }
                        let i = out.at(a + c, b + d);
                        out.coeffs[i] = out.coeffs[i].add(&x.mul(y));
                    }
                }
            }
        }
        out
    }

    /// `[a, b] = ab - ba`
    pub fn comm(&self, o: &Self) -> Self {
        &self.series_mul(o) - &o.series_mul(self)
    }

    /// Quotient by `s - t` of a series vanishing on the diagonal.
    ///
    /// With `D = min(ds, dt)` the quotient is determined on the box of
    /// size `E = (D - 1) / 2`. Every antidiagonal sum up to degree `D` must
    /// vanish, and `(s - t) Q` must reproduce the input wherever `Q` reaches.
    pub fn st_divide(&self) -> Result<Self> {
        let d = self.ds.min(self.dt);
        if d == 0 {
            return Err(Error::NonzeroRemainder { degree: 0 });
        }
        for deg in 0..=d {
            let mut sum = C::zero();
            for m in 0..=deg {
                sum = sum.add(self.coeff(m, deg - m));
            }
            if !sum.is_zero() {
                return Err(Error::NonzeroRemainder { degree: deg });
            }
        }
        let tri = Self::from_fn(d - 1, d - 1, |m, n| {
            let mut acc = C::zero();
            if m + n < d {
                for k in 0..=n {
                    acc = acc.add(self.coeff(m + 1 + k, n - k));
                }
            }
            acc
        });
        for m in 0..=d {
            for n in 0..=d - m {
                let up = if m > 0 { tri.get(m - 1, n).cloned().unwrap_or_else(C::zero) } else { C::zero() };
                let left = if n > 0 { tri.get(m, n - 1).cloned().unwrap_or_else(C::zero) } else { C::zero() };
                if &up.sub(&left) != self.coeff(m, n) {
                    return Err(Error::NonzeroRemainder { degree: m + n });
                }
            }
        }
        let e = (d - 1) / 2;
        Ok(tri.truncate(e, e))
    }
}

impl<C: QAlgebra> TruncatedSeries<C> {
    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Substitute `s -> q^es s`, `t -> q^et t`.
    pub fn rescale(&self, es: i64, et: i64) -> Self {
        let mut out = self.clone();
        for m in 0..=self.ds {
            for n in 0..=self.dt {
                let e = es * m as i64 + et * n as i64;
                if e != 0 {
                    let i = out.at(m, n);
                    out.coeffs[i] = out.coeffs[i].scale(&RationalFunction::q_pow(e));
                }
            }
        }
        out
    }

    /// `[a, b]_q = q ab - q^-1 ba`
    pub fn qcomm(&self, o: &Self) -> Self {
        &self.series_mul(o).scale(&RationalFunction::q()) - &o.series_mul(self).scale(&RationalFunction::q_pow(-1))
    }
}

impl<C: Ring> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, o: Self) -> TruncatedSeries<C> {
        self.zip(o, Ring::add)
    }
}

impl<C: Ring> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, o: Self) -> TruncatedSeries<C> {
        self.zip(o, Ring::sub)
    }
}

impl<C: Ring> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, o: Self) -> TruncatedSeries<C> {
        self.series_mul(o)
    }
}

impl<C: Ring> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.map(Ring::neg)
    }
}

impl<C: Ring> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (a, b, c) in self.terms() {
            m.entry(&(a, b), c);
        }
        m.finish()
    }
}

/// `1 / (1 - s^a t^b)` truncated to degree `max` in each variable.
pub fn geometric_factor(a: usize, b: usize, max: usize) -> TruncatedSeries<i64> {
    assert!(a + b > 0, "geometric factor needs a nonconstant monomial");
    TruncatedSeries::from_fn(max, max, |m, n| {
        let k = m.checked_div(a).unwrap_or_else(|| n / b);
        i64::from(k * a == m && k * b == n)
    })
}

fn product(max: usize, factors: impl Fn(usize) -> Vec<(usize, usize)>) -> TruncatedSeries<i64> {
    let mut out = TruncatedSeries::constant(max, max, 1i64);
    for n in 1..=max + 1 {
        for (a, b) in factors(n) {
            if a <= max && b <= max {
                out = &out * &geometric_factor(a, b, max);
            }
        }
    }
    out
}

/// Graded dimensions of U⁺_q: factors `(n, n-1)`, `(n, n)`, `(n-1, n)` for `n >= 1`.
pub fn h_series(max: usize) -> TruncatedSeries<i64> {
    product(max, |n| vec![(n, n - 1), (n, n), (n - 1, n)])
}

/// Graded dimensions of the polynomial algebra in `z_1, z_2, ...`.
pub fn z_series(max: usize) -> TruncatedSeries<i64> {
    product(max, |n| vec![(n, n)])
}

/// Graded dimensions of the central extension.
pub fn calh_series(max: usize) -> TruncatedSeries<i64> {
    &h_series(max) * &z_series(max)
}

fn coeff_of(series: fn(usize) -> TruncatedSeries<i64>, i: u32, j: u32) -> u64 {
    let s = series(i.max(j) as usize);
    *s.coeff(i as usize, j as usize) as u64
}

pub fn h_coeff(i: u32, j: u32) -> u64 {
    coeff_of(h_series, i, j)
}

pub fn z_coeff(i: u32, j: u32) -> u64 {
    coeff_of(z_series, i, j)
}

pub fn calh_coeff(i: u32, j: u32) -> u64 {
    coeff_of(calh_series, i, j)
}

/// The `(max+1) × (max+1)` matrix of central-extension dimensions.
pub fn dimension_matrix(max: u32) -> Vec<Vec<u64>> {
    let s = calh_series(max as usize);
    (0..=max as usize).map(|i| (0..=max as usize).map(|j| *s.coeff(i, j) as u64).collect()).collect()
}
