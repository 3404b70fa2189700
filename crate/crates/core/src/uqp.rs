//! The positive part U⁺_q realised inside the q-shuffle algebra.
//!
//! Elements of U⁺_q are represented by their images in the free algebra
//! with the q-shuffle product; `A ↦ x`, `B ↦ y`. The alternating elements
//! have single-word images, and every relation among them is checked by
//! computing both sides in that model.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::freeword::{Bidegree, FreeElement, Letter, Word};
use crate::linalg;
use crate::scalar::RationalFunction;
use crate::series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
pub enum AltTag {
    Wminus,
    Wplus,
    G,
    Gtilde,
}

/// An alternating element. `(Wminus, k)` is `W_{-k}`, `(Wplus, k)` is
/// `W_{k+1}`, `(G, k)` and `(Gtilde, k)` are `G_k` and `G~_k`; `G_0 = G~_0 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
pub struct AltKind {
    pub tag: AltTag,
    pub index: u32,
}

impl AltKind {
    pub const fn new(tag: AltTag, index: u32) -> AltKind {
        AltKind { tag, index }
    }

    /// `W_n` for any integer `n`: `W_{-k}` when `n <= 0`, `W_{k+1}` otherwise.
    pub fn w(n: i64) -> AltKind {
        if n <= 0 {
            AltKind::new(AltTag::Wminus, (-n) as u32)
        } else {
            AltKind::new(AltTag::Wplus, (n - 1) as u32)
        }
    }

    pub const fn g(k: u32) -> AltKind {
        AltKind::new(AltTag::G, k)
    }

    pub const fn gt(k: u32) -> AltKind {
        AltKind::new(AltTag::Gtilde, k)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.tag, AltTag::G | AltTag::Gtilde) && self.index == 0
    }

    pub fn degree(&self) -> Bidegree {
        let k = self.index;
        match self.tag {
            AltTag::Wminus => Bidegree(k + 1, k),
            AltTag::Wplus => Bidegree(k, k + 1),
            AltTag::G | AltTag::Gtilde => Bidegree(k, k),
        }
    }

    /// Image under the automorphism swapping the two generators.
    pub fn swapped(&self) -> AltKind {
        let tag = match self.tag {
            AltTag::Wminus => AltTag::Wplus,
            AltTag::Wplus => AltTag::Wminus,
            AltTag::G => AltTag::Gtilde,
            AltTag::Gtilde => AltTag::G,
        };
        AltKind::new(tag, self.index)
    }

    /// Image under the antiautomorphism fixing both generators.
    pub fn reversed(&self) -> AltKind {
        let tag = match self.tag {
            AltTag::G => AltTag::Gtilde,
            AltTag::Gtilde => AltTag::G,
            t => t,
        };
        AltKind::new(tag, self.index)
    }
}

impl fmt::Display for AltKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.index) {
            (AltTag::Wminus, 0) => write!(f, "W0"),
            (AltTag::Wminus, k) => write!(f, "W-{k}"),
            (AltTag::Wplus, k) => write!(f, "W{}", k + 1),
            (AltTag::G, k) => write!(f, "G{k}"),
            (AltTag::Gtilde, k) => write!(f, "GT{k}"),
        }
    }
}

impl FromStr for AltKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<AltKind> {
        let bad = || Error::parse(0, format!("`{s}` is not a generator symbol"));
        let num = |t: &str| -> Result<u32> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        if let Some(rest) = s.strip_prefix("W-") {
            return Ok(AltKind::w(-(num(rest)? as i64)));
        }
        if let Some(rest) = s.strip_prefix("GT") {
            return Ok(AltKind::gt(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('G') {
            return Ok(AltKind::g(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('W') {
            return Ok(AltKind::w(num(rest)? as i64));
        }
        Err(bad())
    }
}

/// The single-word image of an alternating element.
pub fn alt_word(kind: AltKind) -> FreeElement {
    use Letter::{X, Y};
    let k = kind.index as usize;
    let w = match kind.tag {
        AltTag::Wminus => Word::alternating(Some(X), [Y, X], k),
        AltTag::Wplus => Word::alternating(Some(Y), [X, Y], k),
        AltTag::G => Word::alternating(None, [Y, X], k),
        AltTag::Gtilde => Word::alternating(None, [X, Y], k),
    };
    FreeElement::word(w)
}

/// An algebra generated by alternating elements, in which the relation
/// catalogue can be evaluated.
pub trait AltAlgebra: QAlgebra {
    fn generator(kind: AltKind) -> Self;
    fn render(&self) -> String;

    /// `W_n` for any integer `n`.
    fn w(n: i64) -> Self {
        Self::generator(AltKind::w(n))
    }

    fn g(k: u32) -> Self {
        Self::generator(AltKind::g(k))
    }

    fn gt(k: u32) -> Self {
        Self::generator(AltKind::gt(k))
    }

    /// `[a, b] = ab - ba`
    fn comm(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// `[a, b]_q = q ab - q^-1 ba`
    fn qcomm(&self, o: &Self) -> Self {
        self.mul(o).scale(&RationalFunction::q()).sub(&o.mul(self).scale(&RationalFunction::q_pow(-1)))
    }

    fn prod(items: &[Self]) -> Self {
        items.iter().fold(Self::one(), |acc, x| acc.mul(x))
    }
}

/// U⁺_q through its shuffle image; the product is the q-shuffle.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UqElement(pub FreeElement);

impl Ring for UqElement {
    fn zero() -> Self {
        UqElement(FreeElement::zero())
    }
    fn one() -> Self {
        UqElement(FreeElement::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        UqElement(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        UqElement(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        UqElement(self.0.qshuffle(&o.0))
    }
}

impl QAlgebra for UqElement {
    fn from_scalar(c: RationalFunction) -> Self {
        UqElement(FreeElement::scalar(c))
    }
    fn scale(&self, c: &RationalFunction) -> Self {
        UqElement(self.0.scale(c))
    }
}

impl AltAlgebra for UqElement {
    fn generator(kind: AltKind) -> Self {
        UqElement(alt_word(kind))
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Alternating elements indexed by `n`: `g[n] = G_n`, `gt[n] = G~_n`,
/// `wm[n] = W_{-n}`, `wp[n] = W_{n+1}`.
#[derive(Clone, Debug)]
pub struct AlternatingTable<A> {
    pub g: Vec<A>,
    pub gt: Vec<A>,
    pub wm: Vec<A>,
    pub wp: Vec<A>,
}

impl<A: AltAlgebra> AlternatingTable<A> {
    pub fn get(&self, kind: AltKind) -> Option<&A> {
        let i = kind.index as usize;
        match kind.tag {
            AltTag::Wminus => self.wm.get(i),
            AltTag::Wplus => self.wp.get(i),
            AltTag::G => self.g.get(i),
            AltTag::Gtilde => self.gt.get(i),
        }
    }
}

/// Rebuild the alternating elements from `W_0`, `W_1` in the order
/// `G_1, G~_1, W_-1, W_2, G_2, ...` up to index `max`. `central(n)` is added
/// to the numerator of the `G_n` formula; it is zero in U⁺_q and the central
/// element `Z^∨_n` in the central extension.
pub fn recursive_alternating<A: AltAlgebra>(max: u32, central: impl Fn(u32) -> A) -> AlternatingTable<A> {
    let q = RationalFunction::q;
    let qp = RationalFunction::q_pow;
    let one = RationalFunction::one;
    let w0 = A::w(0);
    let w1 = A::w(1);
    let mut t = AlternatingTable { g: vec![A::one()], gt: vec![A::one()], wm: vec![w0.clone()], wp: vec![w1.clone()] };
    let q_minus = q() - qp(-1);
    let one_minus = one() - qp(-2);
    for n in 1..=max as usize {
        let ni = n as i64;
        let mut num = central(n as u32);
        let mut ww = A::zero();
        for k in 0..n {
            ww = ww.add(&t.wm[k].mul(&t.wp[n - k - 1]).scale(&qp(ni - 1 - 2 * k as i64)));
        }
        num = num.add(&ww.scale(&q()));
        for k in 1..n {
            num = num.sub(&t.g[k].mul(&t.gt[n - k]).scale(&qp(ni - 2 * k as i64)));
        }
        let wn = &t.wp[n - 1];
        let comm_n0 = wn.mul(&w0).sub(&w0.mul(wn));
        let gn = num
            .scale(&RationalFunction::q_sym(ni).inv().unwrap())
            .add(&comm_n0.scale(&(&(one() + qp(-2 * ni)) * &one_minus).inv().unwrap()));
        let gtn = gn.sub(&comm_n0.scale(&one_minus.inv().unwrap()));
        let inv_qm = q_minus.inv().unwrap();
        let wmn = w0.mul(&gn).scale(&q()).sub(&gn.mul(&w0).scale(&qp(-1))).scale(&inv_qm);
        let wpn = gn.mul(&w1).scale(&q()).sub(&w1.mul(&gn).scale(&qp(-1))).scale(&inv_qm);
        t.g.push(gn);
        t.gt.push(gtn);
        t.wm.push(wmn);
        t.wp.push(wpn);
    }
    t
}

/// An alternating element computed with the recursion from `x` and `y`.
pub fn alt_recursive(kind: AltKind) -> FreeElement {
    let t = recursive_alternating::<UqElement>(kind.index, |_| UqElement::zero());
    t.get(kind).unwrap().0.clone()
}

/// How a relation is parametrised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    /// One index `k >= 0`.
    Single,
    /// Two indices `k, l >= 0`.
    Pair,
    /// One index `n >= 1` in a sum of products.
    Sum,
}

macro_rules! relations {
    ($($variant:ident => $name:literal, $arity:ident;)*) => {
        /// The identities satisfied by the alternating elements.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Relation { $($variant),* }

        impl Relation {
            pub const ALL: &'static [Relation] = &[$(Relation::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(Relation::$variant => $name),* }
            }

            pub fn arity(self) -> Arity {
                match self { $(Relation::$variant => Arity::$arity),* }
            }
        }

        impl FromStr for Relation {
            type Err = Error;
            fn from_str(s: &str) -> Result<Relation> {
                match s {
                    $($name => Ok(Relation::$variant),)*
                    _ => Err(Error::UnknownRelation(s.to_string())),
                }
            }
        }
    };
}

relations! {
    W0Wplus => "comm_w0_wplus", Single;
    WminusW1 => "comm_wminus_w1", Single;
    W0G => "qcomm_w0_g", Single;
    GtW0 => "qcomm_gt_w0", Single;
    GW1 => "qcomm_g_w1", Single;
    W1Gt => "qcomm_w1_gt", Single;
    WminusWminus => "comm_wminus_wminus", Pair;
    WplusWplus => "comm_wplus_wplus", Pair;
    WminusWplus => "sym_wminus_wplus", Pair;
    WminusG => "sym_wminus_g", Pair;
    WminusGt => "sym_wminus_gt", Pair;
    WplusG => "sym_wplus_g", Pair;
    WplusGt => "sym_wplus_gt", Pair;
    GG => "comm_g_g", Pair;
    GtGt => "comm_gt_gt", Pair;
    GtG => "sym_gt_g", Pair;
    ExWminusG => "exchange_wminus_g", Pair;
    ExGWplus => "exchange_g_wplus", Pair;
    ExGtWminus => "exchange_gt_wminus", Pair;
    ExWplusGt => "exchange_wplus_gt", Pair;
    ExGGt => "exchange_g_gt", Pair;
    ExGtG => "exchange_gt_g", Pair;
    ExGGtQ => "exchange_g_gt_q", Pair;
    ExGtGQ => "exchange_gt_g_q", Pair;
    SumGGtWmWp => "sum_g_gt_wminus_wplus", Sum;
    SumGGtWpWm => "sum_g_gt_wplus_wminus", Sum;
    SumGtGWpWm => "sum_gt_g_wplus_wminus", Sum;
    SumGtGWmWp => "sum_gt_g_wminus_wplus", Sum;
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Relation {
    /// Relations that hold by definition in the central extension.
    pub fn is_defining(self) -> bool {
        (self as usize) <= (Relation::GtG as usize)
    }

    /// Left side minus right side at the given indices.
    pub fn residual<A: AltAlgebra>(self, k: u32, l: u32) -> A {
        use Relation::*;
        let q = RationalFunction::q();
        let qm = &q - &RationalFunction::q_pow(-1);
        let one_minus = RationalFunction::one() - RationalFunction::q_pow(-2);
        let (ki, li) = (k as i64, l as i64);
        let w = A::w;
        let g = A::g;
        let gt = A::gt;
        match self {
            W0Wplus => w(0).comm(&w(ki + 1)).sub(&gt(k + 1).sub(&g(k + 1)).scale(&one_minus)),
            WminusW1 => w(-ki).comm(&w(1)).sub(&gt(k + 1).sub(&g(k + 1)).scale(&one_minus)),
            W0G => w(0).qcomm(&g(k + 1)).sub(&w(-ki - 1).scale(&qm)),
            GtW0 => gt(k + 1).qcomm(&w(0)).sub(&w(-ki - 1).scale(&qm)),
            GW1 => g(k + 1).qcomm(&w(1)).sub(&w(ki + 2).scale(&qm)),
            W1Gt => w(1).qcomm(&gt(k + 1)).sub(&w(ki + 2).scale(&qm)),
            WminusWminus => w(-ki).comm(&w(-li)),
            WplusWplus => w(ki + 1).comm(&w(li + 1)),
            WminusWplus => w(-ki).comm(&w(li + 1)).add(&w(ki + 1).comm(&w(-li))),
            WminusG => w(-ki).comm(&g(l + 1)).add(&g(k + 1).comm(&w(-li))),
            WminusGt => w(-ki).comm(&gt(l + 1)).add(&gt(k + 1).comm(&w(-li))),
            WplusG => w(ki + 1).comm(&g(l + 1)).add(&g(k + 1).comm(&w(li + 1))),
            WplusGt => w(ki + 1).comm(&gt(l + 1)).add(&gt(k + 1).comm(&w(li + 1))),
            GG => g(k + 1).comm(&g(l + 1)),
            GtGt => gt(k + 1).comm(&gt(l + 1)),
            GtG => gt(k + 1).comm(&g(l + 1)).add(&g(k + 1).comm(&gt(l + 1))),
            ExWminusG => w(-ki).qcomm(&g(l)).sub(&w(-li).qcomm(&g(k))),
            ExGWplus => g(k).qcomm(&w(li + 1)).sub(&g(l).qcomm(&w(ki + 1))),
            ExGtWminus => gt(k).qcomm(&w(-li)).sub(&gt(l).qcomm(&w(-ki))),
            ExWplusGt => w(li + 1).qcomm(&gt(k)).sub(&w(ki + 1).qcomm(&gt(l))),
            ExGGt => {
                let lhs = g(k).comm(&gt(l + 1)).sub(&g(l).comm(&gt(k + 1)));
                let rhs = w(-li).qcomm(&w(ki + 1)).sub(&w(-ki).qcomm(&w(li + 1))).scale(&q);
                lhs.sub(&rhs)
            }
            ExGtG => {
                let lhs = gt(k).comm(&g(l + 1)).sub(&gt(l).comm(&g(k + 1)));
                let rhs = w(li + 1).qcomm(&w(-ki)).sub(&w(ki + 1).qcomm(&w(-li))).scale(&q);
                lhs.sub(&rhs)
            }
            ExGGtQ => {
                let lhs = g(k + 1).qcomm(&gt(l + 1)).sub(&g(l + 1).qcomm(&gt(k + 1)));
                let rhs = w(-li).comm(&w(ki + 2)).sub(&w(-ki).comm(&w(li + 2))).scale(&q);
                lhs.sub(&rhs)
            }
            ExGtGQ => {
                let lhs = gt(k + 1).qcomm(&g(l + 1)).sub(&gt(l + 1).qcomm(&g(k + 1)));
                let rhs = w(li + 1).comm(&w(-ki - 1)).sub(&w(ki + 1).comm(&w(-li - 1))).scale(&q);
                lhs.sub(&rhs)
            }
            SumGGtWmWp | SumGGtWpWm | SumGtGWpWm | SumGtGWmWp => sum_residual(self, k),
        }
    }
}

fn sum_residual<A: AltAlgebra>(rel: Relation, n: u32) -> A {
    use Relation::*;
    let qp = RationalFunction::q_pow;
    let ni = n as i64;
    let mut lhs = A::zero();
    for k in 0..=n {
        let ki = k as i64;
        let (term, e) = match rel {
            SumGGtWmWp => (A::g(k).mul(&A::gt(n - k)), ni - 2 * ki),
            SumGGtWpWm => (A::g(k).mul(&A::gt(n - k)), 2 * ki - ni),
            SumGtGWpWm => (A::gt(k).mul(&A::g(n - k)), ni - 2 * ki),
            _ => (A::gt(k).mul(&A::g(n - k)), 2 * ki - ni),
        };
        lhs = lhs.add(&term.scale(&qp(e)));
    }
    let mut rhs = A::zero();
    for k in 0..n {
        let ki = k as i64;
        let (term, e) = match rel {
            SumGGtWmWp => (A::w(-ki).mul(&A::w(ni - ki)), ni - 1 - 2 * ki),
            SumGGtWpWm => (A::w(ni - ki).mul(&A::w(-ki)), ni - 1 - 2 * ki),
            SumGtGWpWm => (A::w(ni - ki).mul(&A::w(-ki)), 2 * ki + 1 - ni),
            _ => (A::w(-ki).mul(&A::w(ni - ki)), 2 * ki + 1 - ni),
        };
        rhs = rhs.add(&term.scale(&qp(e)));
    }
    lhs.sub(&rhs.scale(&RationalFunction::q()))
}

/// One evaluated relation instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub k: u32,
    pub l: Option<u32>,
    pub residual: String,
    pub pass: bool,
}

impl RelationReport {
    pub fn from_residual<A: AltAlgebra>(rel: Relation, k: u32, l: u32, r: &A) -> RelationReport {
        RelationReport {
            relation: rel.name().to_string(),
            k,
            l: (rel.arity() == Arity::Pair).then_some(l),
            residual: r.render(),
            pass: r.is_zero(),
        }
    }
}

/// Parameter tuples `(k, l)` at which a relation is checked.
pub fn instances(rel: Relation, max_index: u32, max_sum: u32) -> Vec<(u32, u32)> {
    match rel.arity() {
        Arity::Single => (0..=max_index).map(|k| (k, 0)).collect(),
        Arity::Pair => (0..=max_index).flat_map(|k| (0..=max_index).map(move |l| (k, l))).collect(),
        Arity::Sum => (1..=max_sum).map(|n| (n, 0)).collect(),
    }
}

pub fn verify_uqp_relation(rel: Relation, k: u32, l: u32) -> RelationReport {
    let r: UqElement = rel.residual(k, l);
    RelationReport::from_residual(rel, k, l, &r)
}

/// An ordered product of alternating elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AltMonomial(pub Vec<AltKind>);

impl AltMonomial {
    pub fn degree(&self) -> Bidegree {
        self.0.iter().fold(Bidegree(0, 0), |d, k| d + k.degree())
    }

    pub fn evaluate<A: AltAlgebra>(&self) -> A {
        self.0.iter().fold(A::one(), |acc, k| acc.mul(&A::generator(*k)))
    }
}

impl fmt::Display for AltMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

/// All nondecreasing sequences over `alphabet` (given in increasing order)
/// with total degree `target`. Every letter must have nonzero degree.
pub fn ordered_monomials(alphabet: &[AltKind], target: Bidegree) -> Vec<AltMonomial> {
    fn go(alphabet: &[AltKind], from: usize, left: Bidegree, cur: &mut Vec<AltKind>, out: &mut Vec<AltMonomial>) {
        if left == Bidegree(0, 0) {
            out.push(AltMonomial(cur.clone()));
            return;
        }
        for i in from..alphabet.len() {
            let d = alphabet[i].degree();
            if d.0 <= left.0 && d.1 <= left.1 {
                cur.push(alphabet[i]);
                go(alphabet, i, Bidegree(left.0 - d.0, left.1 - d.1), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(alphabet, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Generators `W_-k`, then `G~_{k+1}`, then `W_{k+1}`, each by ascending index,
/// restricted to those fitting in degree `(i, j)`.
fn uq_alphabet(i: u32, j: u32) -> Vec<AltKind> {
    let fits = |k: &AltKind| k.degree().0 <= i && k.degree().1 <= j;
    let m = i.max(j) + 1;
    let mut out: Vec<AltKind> = Vec::new();
    out.extend((0..m).map(|k| AltKind::new(AltTag::Wminus, k)).filter(fits));
    out.extend((1..=m).map(AltKind::gt).filter(fits));
    out.extend((0..m).map(|k| AltKind::new(AltTag::Wplus, k)).filter(fits));
    out
}

/// The alternating PBW monomials of U⁺_q in degree `(i, j)`.
pub fn uq_pbw_monomials(i: u32, j: u32) -> Vec<AltMonomial> {
    ordered_monomials(&uq_alphabet(i, j), Bidegree(i, j))
}

/// Dimension of the `(i, j)` component of U⁺_q.
pub fn uq_dim(i: u32, j: u32) -> u64 {
    series::h_coeff(i, j)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub degree: Bidegree,
    pub monomials: usize,
    pub rank: usize,
    pub expected: u64,
    pub pass: bool,
}

/// Rank of the shuffle images of the PBW monomials in degree `(i, j)`.
pub fn independence_check_uq(i: u32, j: u32) -> RankReport {
    let monos = uq_pbw_monomials(i, j);
    let images: Vec<FreeElement> = monos.iter().map(|m| m.evaluate::<UqElement>().0).collect();
    let rank = linalg::rank_of_combinations(&images);
    let expected = uq_dim(i, j);
    RankReport {
        degree: Bidegree(i, j),
        monomials: monos.len(),
        rank,
        expected,
        pass: rank == monos.len() && monos.len() as u64 == expected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FreeElement {
        s.parse().unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(alt_word(AltKind::w(0)), fe("x"));
        assert_eq!(alt_word(AltKind::gt(2)), fe("xyxy"));
        assert_eq!(alt_word(AltKind::g(0)), FreeElement::one());
        assert_eq!(alt_word(AltKind::w(-1)), fe("xyx"));
        assert_eq!(alt_word(AltKind::w(2)), fe("yxy"));
    }

    #[test]
    fn symbols_round_trip() {
        for s in ["W0", "W-3", "W1", "W4", "G0", "G2", "GT1"] {
            assert_eq!(s.parse::<AltKind>().unwrap().to_string(), s);
        }
        assert_eq!("W-0".parse::<AltKind>().unwrap(), AltKind::w(0));
        assert!("X1".parse::<AltKind>().is_err());
        assert!("G".parse::<AltKind>().is_err());
    }

    #[test]
    fn recursion_small_cases() {
        assert_eq!(alt_recursive(AltKind::gt(1)), fe("xy"));
        assert_eq!(alt_recursive(AltKind::w(-1)), fe("xyx"));
        assert_eq!(alt_recursive(AltKind::w(1)), fe("y"));
    }

    #[test]
    fn unknown_relation() {
        assert_eq!("nope".parse::<Relation>(), Err(Error::UnknownRelation("nope".into())));
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), *r);
        }
    }

    #[test]
    fn pbw_small() {
        let s: Vec<String> = uq_pbw_monomials(1, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["W0*W1", "GT1"]);
        assert_eq!(uq_pbw_monomials(1, 0).len(), 1);
        assert_eq!(uq_pbw_monomials(0, 0), vec![AltMonomial(vec![])]);
    }
}
