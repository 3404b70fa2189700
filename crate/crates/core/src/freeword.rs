//! The free algebra on `x`, `y` with concatenation and the q-shuffle product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::parse::{self, ExprAlgebra};
use crate::scalar::{IntPoly, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u64) -> Letter {
        if b & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    /// The form `<a, b>`: 2 on equal letters, -2 otherwise.
    pub fn pairing(self, other: Letter) -> i32 {
        if self == other {
            2
        } else {
            -2
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// Bidegree `(number of x, number of y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Bidegree(pub u32, pub u32);

impl std::ops::Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree(self.0 + o.0, self.1 + o.1)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A word over `{x, y}` packed into a machine word, first letter most
/// significant. Ordered by length, then lexicographically with `x < y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub const MAX_LEN: usize = 63;

    pub const fn empty() -> Word {
        Word { len: 0, bits: 0 }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() <= Self::MAX_LEN, "word longer than {} letters", Self::MAX_LEN);
        let bits = letters.iter().fold(0u64, |acc, l| (acc << 1) | l.bit());
        Word { len: letters.len() as u8, bits }
    }

    /// Repeat `pattern` `times` times, optionally after a leading letter.
    pub fn alternating(lead: Option<Letter>, pattern: [Letter; 2], times: usize) -> Word {
        let mut letters = Vec::with_capacity(2 * times + 1);
        letters.extend(lead);
        for _ in 0..times {
            letters.extend(pattern);
        }
        Word::from_letters(&letters)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` counted from the left.
    pub fn letter(&self, i: usize) -> Letter {
        Letter::from_bit(self.bits >> (self.len as usize - 1 - i))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(|i| self.letter(i))
    }

    pub fn degree(&self) -> Bidegree {
        let ys = self.bits.count_ones();
        Bidegree(self.len as u32 - ys, ys)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= Self::MAX_LEN, "word longer than {} letters", Self::MAX_LEN);
        Word { len: len as u8, bits: (self.bits << other.len) | other.bits }
    }

    pub fn reversed(&self) -> Word {
        if self.len == 0 {
            return *self;
        }
        Word { len: self.len, bits: self.bits.reverse_bits() >> (64 - self.len as u32) }
    }

    pub fn swapped(&self) -> Word {
        let mask = if self.len == 0 { 0 } else { u64::MAX >> (64 - self.len as u32) };
        Word { len: self.len, bits: self.bits ^ mask }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            f.write_str(if l == Letter::X { "x" } else { "y" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for (i, c) in s.char_indices() {
            letters.push(match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                _ => return Err(Error::parse(i, format!("`{c}` is not a letter of the alphabet {{x, y}}"))),
            });
        }
        if letters.len() > Word::MAX_LEN {
            return Err(Error::parse(0, "word too long"));
        }
        Ok(Word::from_letters(&letters))
    }
}

impl Basis for Word {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_unit(&self) -> bool {
        self.is_empty()
    }
}

/// Sparse Laurent polynomial with machine-integer coefficients, sorted by exponent.
#[derive(Clone, Debug, Default)]
struct SmallLaurent(Vec<(i32, i64)>);

impl SmallLaurent {
    fn one() -> Self {
        SmallLaurent(vec![(0, 1)])
    }

    /// `self += other * q^shift`
    fn add_shifted(&mut self, other: &SmallLaurent, shift: i32) {
        if self.0.is_empty() {
            self.0 = other.0.iter().map(|&(e, c)| (e + shift, c)).collect();
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let a = self.0.get(i).copied();
            let b = other.0.get(j).map(|&(e, c)| (e + shift, c));
            match (a, b) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(a);
                    i += 1;
                }
                (Some(_), Some(b)) | (None, Some(b)) => {
                    out.push(b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.0 = out;
    }

    fn to_rational(&self) -> RationalFunction {
        let lo = self.0.first().map_or(0, |t| t.0);
        let hi = self.0.last().map_or(0, |t| t.0);
        let mut cs = vec![BigInt::from(0); (hi - lo + 1) as usize];
        for &(e, c) in &self.0 {
            cs[(e - lo) as usize] = BigInt::from(c);
        }
        RationalFunction::from_laurent(IntPoly::from_coeffs(cs), lo as i64)
    }
}

/// q-shuffle of two words: every interleaving weighted by `q^e`, where `e`
/// sums `<u_i, v_j>` over pairs with the letter of `u` placed after the
/// letter of `v`.
pub fn shuffle_words(u: &Word, v: &Word) -> Vec<(Word, RationalFunction)> {
    let (m, n) = (u.len(), v.len());
    if m == 0 || n == 0 {
        return vec![(u.concat(v), RationalFunction::one())];
    }
    assert!(m + n <= Word::MAX_LEN, "word longer than {} letters", Word::MAX_LEN);
    let ul: Vec<Letter> = u.letters().collect();
    let vl: Vec<Letter> = v.letters().collect();
    // cross[a][j]: exponent gained by placing u_a after v_0..v_{j-1}.
    let cross: Vec<Vec<i32>> = ul
        .iter()
        .map(|&a| {
            let mut row = vec![0; n + 1];
            for j in 0..n {
                row[j + 1] = row[j] + a.pairing(vl[j]);
            }
            row
        })
        .collect();

    type Layer = FxHashMap<u64, SmallLaurent>;
    let extend = |into: &mut Layer, from: &Layer, bit: u64, shift: i32| {
        for (w, c) in from {
            into.entry((w << 1) | bit).or_default().add_shifted(c, shift);
        }
    };
    let mut prev: Vec<Layer> = Vec::with_capacity(n + 1);
    let mut start = Layer::default();
    start.insert(0, SmallLaurent::one());
    prev.push(start);
    for j in 1..=n {
        let mut cell = Layer::default();
        extend(&mut cell, &prev[j - 1], vl[j - 1].bit(), 0);
        prev.push(cell);
    }
    for i in 1..=m {
        let a = ul[i - 1];
        let mut cur: Vec<Layer> = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut cell = Layer::default();
            extend(&mut cell, &prev[j], a.bit(), cross[i - 1][j]);
            if j > 0 {
                let left = std::mem::take(&mut cur[j - 1]);
                extend(&mut cell, &left, vl[j - 1].bit(), 0);
                cur[j - 1] = left;
            }
            cur.push(cell);
        }
        prev = cur;
    }
    let len = (m + n) as u8;
    let mut out: Vec<(Word, RationalFunction)> = prev
        .pop()
        .unwrap()
        .into_iter()
        .filter(|(_, c)| c.0.iter().any(|t| t.1 != 0))
        .map(|(bits, c)| (Word { len, bits }, c.to_rational()))
        .collect();
    out.sort_by_key(|t| t.0);
    out
}

/// Which product a bracket is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Concat,
    QShuffle,
}

/// An element of the free algebra: a linear combination of words.
pub type FreeElement = LinComb<Word>;

impl LinComb<Word> {
    pub fn one() -> Self {
        LinComb::basis(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        LinComb::basis(w)
    }

    pub fn letter(l: Letter) -> Self {
        LinComb::basis(Word::from_letters(&[l]))
    }

    pub fn x() -> Self {
        Self::letter(Letter::X)
    }

    pub fn y() -> Self {
        Self::letter(Letter::Y)
    }

    pub fn scalar(c: RationalFunction) -> Self {
        LinComb::term(Word::empty(), c)
    }

    pub fn concat(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| LinComb::basis(a.concat(b)))
    }

    pub fn qshuffle(&self, other: &Self) -> Self {
        let mut out = LinComb::zero();
        for (a, ca) in self {
            for (b, cb) in other {
                let c = ca * cb;
                for (w, k) in shuffle_words(a, b) {
                    out.add_term(w, &k * &c);
                }
            }
        }
        out
    }

    pub fn product(&self, other: &Self, p: Product) -> Self {
        match p {
            Product::Concat => self.concat(other),
            Product::QShuffle => self.qshuffle(other),
        }
    }

    /// `[a, b] = ab - ba`
    pub fn bracket(&self, other: &Self, p: Product) -> Self {
        self.product(other, p) - other.product(self, p)
    }

    /// `[a, b]_q = q ab - q^-1 ba`
    pub fn qbracket(&self, other: &Self, p: Product) -> Self {
        self.product(other, p).scale(&RationalFunction::q())
            - other.product(self, p).scale(&RationalFunction::q_pow(-1))
    }

    /// Split into homogeneous components keyed by bidegree.
    pub fn grade(&self) -> std::collections::BTreeMap<Bidegree, FreeElement> {
        let mut out = std::collections::BTreeMap::<Bidegree, FreeElement>::new();
        for (w, c) in self {
            out.entry(w.degree()).or_default().add_term(*w, c.clone());
        }
        out
    }

    /// Interchange `x` and `y` in every word.
    pub fn letter_swap(&self) -> Self {
        self.map_basis(|w| Some(w.swapped()))
    }

    /// Reverse every word.
    pub fn reverse(&self) -> Self {
        self.map_basis(|w| Some(w.reversed()))
    }
}

impl ExprAlgebra for FreeElement {
    fn from_scalar(c: RationalFunction) -> Self {
        FreeElement::scalar(c)
    }
    fn atom(name: &str) -> Option<Self> {
        if name.chars().all(|c| c == 'x' || c == 'y') && name.len() <= Word::MAX_LEN {
            name.parse().ok().map(FreeElement::word)
        } else {
            None
        }
    }
    fn as_scalar(&self) -> Option<RationalFunction> {
        match self.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.iter().next().filter(|(w, _)| w.is_empty()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn sub(self, o: Self) -> Self {
        self - o
    }
    fn mul(self, o: Self) -> Self {
        self.concat(&o)
    }
    fn scale(self, c: &RationalFunction) -> Self {
        LinComb::scale(&self, c)
    }
}

/// Parse `coef*word` sums; `*` between words is concatenation.
pub fn parse_free_element(s: &str) -> Result<FreeElement> {
    parse::parse_expr(s)
}

impl FromStr for LinComb<Word> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_free_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FreeElement {
        parse_free_element(s).unwrap()
    }

    #[test]
    fn word_packing() {
        let w: Word = "xyy".parse().unwrap();
        assert_eq!(w.letter(0), Letter::X);
        assert_eq!(w.letter(2), Letter::Y);
        assert_eq!(w.degree(), Bidegree(1, 2));
        assert_eq!(w.reversed().to_string(), "yyx");
        assert_eq!(w.swapped().to_string(), "yxx");
        assert_eq!(w.concat(&"x".parse().unwrap()).to_string(), "xyyx");
        assert_eq!(Word::empty().to_string(), "1");
        assert!("xz".parse::<Word>().is_err());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut ws: Vec<Word> = ["yx", "x", "xy", "y", "1", "xx"].iter().map(|s| s.parse().unwrap()).collect();
        ws.sort();
        let s: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(s, ["1", "x", "y", "xx", "xy", "yx"]);
    }

    #[test]
    fn concat_examples() {
        assert_eq!(fe("x").concat(&fe("y")), fe("xy"));
        assert_eq!(FreeElement::one().concat(&fe("xyx")), fe("xyx"));
        assert_eq!(fe("x + y").concat(&fe("x")), fe("xx + yx"));
    }

    #[test]
    fn letter_case_shuffles() {
        assert_eq!(fe("x").qshuffle(&fe("y")), fe("xy + q^-2*yx"));
        assert_eq!(fe("x").qshuffle(&fe("x")), fe("(1+q^2)*xx"));
    }

    #[test]
    fn brackets() {
        assert!(fe("x").bracket(&fe("x"), Product::QShuffle).is_zero());
        assert_eq!(fe("x").bracket(&fe("y"), Product::QShuffle), fe("(1-q^-2)*(xy - yx)"));
        assert_eq!(fe("x").qbracket(&fe("y"), Product::Concat), fe("q*xy - q^-1*yx"));
    }

    #[test]
    fn grading() {
        let g = fe("xy + q*yx + x").grade();
        assert_eq!(g.len(), 2);
        assert_eq!(g[&Bidegree(1, 1)], fe("xy + q*yx"));
        assert_eq!(g[&Bidegree(1, 0)], fe("x"));
        assert!(FreeElement::zero().grade().is_empty());
    }

    #[test]
    fn symmetries() {
        assert_eq!(fe("xyx").letter_swap(), fe("yxy"));
        assert_eq!(fe("yx").reverse(), fe("xy"));
        assert_eq!(fe("xyx").reverse(), fe("xyx"));
    }

    #[test]
    fn rendering() {
        assert_eq!(fe("xy - q^-2*yx + 3").to_string(), "3 + xy - q^-2*yx");
        assert_eq!(fe("(q+1)*xx").to_string(), "(q+1)*xx");
        assert_eq!(FreeElement::zero().to_string(), "0");
        for s in ["x + q^-2*y", "-(q^2+1)*xy + yx", "2 - xyx"] {
            assert_eq!(fe(s).to_string(), s);
        }
    }
}
