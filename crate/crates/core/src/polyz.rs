//! Polynomials in commuting variables `z_1, z_2, ...` over Q(q).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::freeword::Bidegree;
use crate::lincomb::{Basis, LinComb};
use crate::scalar::RationalFunction;
use crate::series;

/// `z_1^e1 z_2^e2 ...`; `exps[i]` is the exponent of `z_{i+1}`, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZMonomial {
    exps: Vec<u32>,
}

impl ZMonomial {
    pub fn one() -> ZMonomial {
        ZMonomial::default()
    }

    /// `z_n`; `z_0 = 1`.
    pub fn var(n: u32) -> ZMonomial {
        ZMonomial::from_exponents(&[(n, 1)])
    }

    /// From `(index, exponent)` pairs; index 0 is ignored.
    pub fn from_exponents(pairs: &[(u32, u32)]) -> ZMonomial {
        let mut exps = Vec::new();
        for &(n, e) in pairs {
            if n == 0 || e == 0 {
                continue;
            }
            let i = n as usize - 1;
            if exps.len() <= i {
                exps.resize(i + 1, 0);
            }
            exps[i] += e;
        }
        ZMonomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `z_n`.
    pub fn exponent(&self, n: u32) -> u32 {
        if n == 0 {
            return 0;
        }
        self.exps.get(n as usize - 1).copied().unwrap_or(0)
    }

    /// `(index, exponent)` for each variable present.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u32 + 1, e))
    }

    /// `Σ n e_n`.
    pub fn weight(&self) -> u32 {
        self.factors().map(|(n, e)| n * e).sum()
    }

    pub fn degree(&self) -> Bidegree {
        let w = self.weight();
        Bidegree(w, w)
    }

    pub fn mul(&self, o: &ZMonomial) -> ZMonomial {
        let (long, short) = if self.exps.len() >= o.exps.len() { (self, o) } else { (o, self) };
        let mut exps = long.exps.clone();
        for (i, e) in short.exps.iter().enumerate() {
            exps[i] += e;
        }
        ZMonomial { exps }
    }
}

impl Ord for ZMonomial {
    /// Weight first, then exponent vectors lexicographically.
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| {
            let n = self.exps.len().max(o.exps.len());
            (0..n)
                .map(|i| {
                    let a = self.exps.get(i).copied().unwrap_or(0);
                    let b = o.exps.get(i).copied().unwrap_or(0);
                    a.cmp(&b)
                })
                .find(|c| c.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.factors().map(|(n, e)| if e == 1 { format!("z{n}") } else { format!("z{n}^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ZMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Basis for ZMonomial {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

pub type ZPoly = LinComb<ZMonomial>;

impl ZPoly {
    pub fn zvar(n: u32) -> ZPoly {
        ZPoly::basis(ZMonomial::var(n))
    }

    pub fn zmul(&self, o: &ZPoly) -> ZPoly {
        self.bilinear(o, |a, b| ZPoly::basis(a.mul(b)))
    }

    pub fn zpow(&self, e: u32) -> ZPoly {
        (0..e).fold(ZPoly::basis(ZMonomial::one()), |acc, _| acc.zmul(self))
    }

    /// Algebra map sending `z_n` to `image(n)`.
    pub fn substitute(&self, image: &dyn Fn(u32) -> ZPoly) -> ZPoly {
        let mut cache: HashMap<(u32, u32), ZPoly> = HashMap::new();
        let mut out = ZPoly::zero();
        for (m, c) in self.iter() {
            let mut term = ZPoly::basis(ZMonomial::one());
            for (n, e) in m.factors() {
                let p = cache.entry((n, e)).or_insert_with(|| image(n).zpow(e));
                term = term.zmul(p);
            }
            out += &term.scale(c);
        }
        out
    }

    /// Every term has weighted degree `(n, n)`.
    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.keys().all(|m| m.weight() == n)
    }
}

/// `z^∨_n = Σ_{k=0}^{n} z_k z_{n-k} q^{n-2k}`.
pub fn zvee(n: u32) -> ZPoly {
    let mut out = ZPoly::zero();
    for k in 0..=n {
        let m = ZMonomial::var(k).mul(&ZMonomial::var(n - k));
        out.add_term(m, RationalFunction::q_pow(n as i64 - 2 * k as i64));
    }
    out
}

/// `z_n` as a polynomial in the variables `z^∨_1, z^∨_2, ...`; variable
/// index `m` of the result stands for `z^∨_m`.
pub fn z_from_zvee(n: u32) -> ZPoly {
    let mut table: Vec<ZPoly> = vec![ZPoly::basis(ZMonomial::one())];
    for m in 1..=n as usize {
        let mut num = ZPoly::zvar(m as u32);
        for k in 1..m {
            let c = RationalFunction::q_pow(m as i64 - 2 * k as i64);
            num -= &table[k].zmul(&table[m - k]).scale(&c);
        }
        table.push(num.scale(&RationalFunction::q_sym(m as i64).inv().expect("q^n + q^-n is nonzero")));
    }
    table.swap_remove(n as usize)
}

/// The automorphism `z_n ↦ z^∨_n`.
pub fn z_automorphism(p: &ZPoly) -> ZPoly {
    p.substitute(&zvee)
}

/// Dimension of the degree `(i, j)` component.
pub fn zpoly_dim(i: u32, j: u32) -> u64 {
    series::z_coeff(i, j)
}

/// All monomials of weighted degree `n`, in increasing order.
pub fn monomials_of_weight(n: u32) -> Vec<ZMonomial> {
    fn go(left: u32, max_part: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<ZMonomial>) {
        if left == 0 {
            out.push(ZMonomial::from_exponents(cur));
            return;
        }
        for part in (1..=max_part.min(left)).rev() {
            cur.push((part, 1));
            go(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(s: &[(&[(u32, u32)], RationalFunction)]) -> ZPoly {
        ZPoly::from_terms(s.iter().map(|(m, c)| (ZMonomial::from_exponents(m), c.clone())))
    }

    #[test]
    fn rendering_and_order() {
        let m = ZMonomial::from_exponents(&[(3, 1), (1, 2)]);
        assert_eq!(m.to_string(), "z1^2*z3");
        assert_eq!(ZMonomial::one().to_string(), "1");
        let mut ms = monomials_of_weight(3);
        ms.sort();
        let s: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["z3", "z1*z2", "z1^3"]);
    }

    #[test]
    fn zvee_examples() {
        assert_eq!(zvee(0), ZPoly::basis(ZMonomial::one()));
        assert_eq!(zvee(1), zp(&[(&[(1, 1)], RationalFunction::q_sym(1))]));
        assert_eq!(
            zvee(3),
            zp(&[(&[(3, 1)], RationalFunction::q_sym(3)), (&[(1, 1), (2, 1)], RationalFunction::q_sym(1))])
        );
    }

    #[test]
    fn inversion_examples() {
        let b1 = RationalFunction::q_sym(1);
        assert_eq!(z_from_zvee(1), zp(&[(&[(1, 1)], b1.inv().unwrap())]));
        let den = &(&b1 * &b1) * &RationalFunction::q_sym(2);
        let expected = zp(&[(&[(2, 1)], &(&b1 * &b1) / &den), (&[(1, 2)], -(RationalFunction::one() / &den))]);
        assert_eq!(z_from_zvee(2), expected);
    }

    #[test]
    fn automorphism_examples() {
        let b1 = RationalFunction::q_sym(1);
        assert_eq!(z_automorphism(&ZPoly::zvar(1)), zp(&[(&[(1, 1)], b1.clone())]));
        assert_eq!(z_automorphism(&ZPoly::basis(ZMonomial::one())), ZPoly::basis(ZMonomial::one()));
        assert_eq!(z_automorphism(&ZPoly::zvar(1).zpow(2)), zp(&[(&[(1, 2)], &b1 * &b1)]));
    }

    #[test]
    fn dims() {
        assert_eq!(zpoly_dim(1, 1), 1);
        assert_eq!(zpoly_dim(2, 1), 0);
        assert_eq!(zpoly_dim(3, 3), 3);
        for n in 0..8 {
            assert_eq!(monomials_of_weight(n).len() as u64, zpoly_dim(n, n));
        }
    }
}
