//! Sparse Q(q)-linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::RationalFunction;

/// A basis element that can be rendered in a sum.
pub trait Basis: Ord + Clone {
    /// Text form of the basis element.
    fn render(&self) -> String;
    /// True for the multiplicative identity, rendered as a bare coefficient.
    fn is_unit(&self) -> bool;
}

/// Finite linear combination; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RationalFunction>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, RationalFunction::one())
    }

    pub fn term(k: K, c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, RationalFunction)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, RationalFunction> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> RationalFunction {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: K, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Apply a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Apply a basis relabelling; terms mapped to `None` are dropped.
    pub fn map_basis<L: Ord + Clone>(&self, f: impl Fn(&K) -> Option<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            if let Some(l) = f(k) {
                out.add_term(l, c.clone());
            }
        }
        out
    }

    /// Keep only the terms whose basis element satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&K) -> bool) -> Self {
        LinComb { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    /// Bilinear extension of a product given on basis pairs.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L>,
        f: impl Fn(&K, &L) -> LinComb<M>,
    ) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, RationalFunction> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, RationalFunction)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, RationalFunction)>>(it: I) -> Self {
        LinComb::from_terms(it)
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a RationalFunction);
    type IntoIter = btree_map::Iter<'a, K, RationalFunction>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

impl<K: Ord + Clone> Mul<&RationalFunction> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, c: &RationalFunction) -> LinComb<K> {
        self.scale(c)
    }
}

impl<K: Ord + Clone> Mul<RationalFunction> for LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, c: RationalFunction) -> LinComb<K> {
        self.scale(&c)
    }
}

/// Basis elements appearing in a family of combinations, in order.
pub fn support<K: Ord + Clone>(items: &[LinComb<K>]) -> Vec<K> {
    let set: BTreeSet<K> = items.iter().flat_map(|e| e.keys().cloned()).collect();
    set.into_iter().collect()
}

/// Render `terms` as a signed sum, e.g. `W0*W1 + (1-q^-2)*G1 - q*GT1`.
pub fn render_sum<'a>(terms: impl IntoIterator<Item = (String, bool, &'a RationalFunction)>) -> String {
    let mut out = String::new();
    for (basis, unit, c) in terms {
        let neg = c.is_negative_leading();
        let mag = if neg { -c } else { c.clone() };
        let body = if unit {
            mag.to_string()
        } else if mag.is_one() {
            basis
        } else {
            format!("{mag}*{basis}")
        };
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<K: Basis> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self.terms.iter().map(|(k, c)| (k.render(), k.is_unit(), c))))
    }
}

impl<K: Basis> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialised as a list of `[basis, coefficient]` string pairs in basis order.
impl<K: Basis> serde::Serialize for LinComb<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&(k.render(), c.to_string()))?;
        }
        seq.end()
    }
}
