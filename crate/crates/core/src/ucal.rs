//! The alternating central extension, modelled as U⁺_q ⊗ Q(q)[z_1, z_2, ...].
//!
//! Each generator is represented by its image in the tensor product, where
//! the first factor carries the q-shuffle product and the second is the
//! commutative polynomial algebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::freeword::{Bidegree, FreeElement, Word};
use crate::linalg;
use crate::lincomb::{render_sum, Basis, LinComb};
use crate::polyz::{self, ZMonomial, ZPoly};
use crate::scalar::RationalFunction;
use crate::series;
use crate::uqp::{
    alt_word, recursive_alternating, uq_pbw_monomials, AltAlgebra, AltKind, AltTag, Arity, Relation, RelationReport,
};

/// A pure tensor `word ⊗ monomial`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorKey {
    pub word: Word,
    pub z: ZMonomial,
}

impl TensorKey {
    pub fn degree(&self) -> Bidegree {
        self.word.degree() + self.z.degree()
    }
}

impl Basis for TensorKey {
    fn render(&self) -> String {
        format!("{}⊗{}", self.word, self.z)
    }
    fn is_unit(&self) -> bool {
        self.word.is_empty() && self.z.is_one()
    }
}

/// An element of U⁺_q ⊗ Q(q)[z].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement(pub LinComb<TensorKey>);

impl TensorElement {
    pub fn tensor(a: &FreeElement, p: &ZPoly) -> TensorElement {
        let mut out = LinComb::zero();
        for (w, c) in a {
            for (m, d) in p {
                out.add_term(TensorKey { word: *w, z: m.clone() }, c * d);
            }
        }
        TensorElement(out)
    }

    /// `a ⊗ 1`
    pub fn from_free(a: &FreeElement) -> TensorElement {
        TensorElement::tensor(a, &ZPoly::basis(ZMonomial::one()))
    }

    /// `1 ⊗ p`
    pub fn from_zpoly(p: &ZPoly) -> TensorElement {
        TensorElement::tensor(&FreeElement::one(), p)
    }

    /// Collect the word parts attached to each monomial.
    pub fn by_monomial(&self) -> BTreeMap<ZMonomial, FreeElement> {
        let mut out: BTreeMap<ZMonomial, FreeElement> = BTreeMap::new();
        for (k, c) in &self.0 {
            out.entry(k.z.clone()).or_default().add_term(k.word, c.clone());
        }
        out
    }

    pub fn grade(&self) -> BTreeMap<Bidegree, TensorElement> {
        let mut out: BTreeMap<Bidegree, TensorElement> = BTreeMap::new();
        for (k, c) in &self.0 {
            out.entry(k.degree()).or_default().0.add_term(k.clone(), c.clone());
        }
        out
    }

    fn map_words(&self, f: impl Fn(&Word) -> Word) -> TensorElement {
        TensorElement(self.0.map_basis(|k| Some(TensorKey { word: f(&k.word), z: k.z.clone() })))
    }
}

impl Ring for TensorElement {
    fn zero() -> Self {
        TensorElement::default()
    }
    fn one() -> Self {
        TensorElement(LinComb::basis(TensorKey { word: Word::empty(), z: ZMonomial::one() }))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        TensorElement(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        TensorElement(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        let (left, right) = (self.by_monomial(), o.by_monomial());
        let mut out = LinComb::zero();
        for (p, a) in &left {
            for (r, b) in &right {
                let z = p.mul(r);
                for (w, c) in &a.qshuffle(b) {
                    out.add_term(TensorKey { word: *w, z: z.clone() }, c.clone());
                }
            }
        }
        TensorElement(out)
    }
}

impl QAlgebra for TensorElement {
    fn from_scalar(c: RationalFunction) -> Self {
        TensorElement::one().scale(&c)
    }
    fn scale(&self, c: &RationalFunction) -> Self {
        TensorElement(self.0.scale(c))
    }
}

impl AltAlgebra for TensorElement {
    fn generator(kind: AltKind) -> Self {
        gen_image(kind)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self.0.iter().map(|(k, c)| (k.render(), k.is_unit(), c))))
    }
}

/// Image of an alternating generator in the tensor model.
pub fn gen_image(kind: AltKind) -> TensorElement {
    let n = kind.index as i64;
    let mut out = LinComb::zero();
    for k in 0..=kind.index {
        let ki = k as i64;
        let part = match kind.tag {
            AltTag::Wminus => AltKind::w(ki - n),
            AltTag::Wplus => AltKind::w(n + 1 - ki),
            AltTag::G => AltKind::g(kind.index - k),
            AltTag::Gtilde => AltKind::gt(kind.index - k),
        };
        for (w, c) in &alt_word(part) {
            out.add_term(TensorKey { word: *w, z: ZMonomial::var(k) }, c.clone());
        }
    }
    TensorElement(out)
}

/// Relations of the catalogue that hold in the central extension.
pub fn ucal_relations() -> Vec<Relation> {
    Relation::ALL.iter().copied().filter(|r| r.arity() != Arity::Sum).collect()
}

pub fn verify_ucal_relation(rel: Relation, k: u32, l: u32) -> Result<RelationReport> {
    if rel.arity() == Arity::Sum {
        return Err(Error::UnknownRelation(format!("{rel} is not a relation of the central extension")));
    }
    let r: TensorElement = rel.residual(k, l);
    Ok(RelationReport::from_residual(rel, k, l, &r))
}

/// `Σ G_k G~_{n-k} q^{n-2k} - q Σ W_{-k} W_{n-k} q^{n-1-2k}`, with the value 1 at `n = 0`.
pub fn zvee_expression<A: AltAlgebra>(n: u32) -> A {
    if n == 0 {
        return A::one();
    }
    four_forms::<A>(n)[0].clone()
}

/// The four sums that all equal `Z^∨_n`.
pub fn four_forms<A: AltAlgebra>(n: u32) -> [A; 4] {
    if n == 0 {
        return [A::one(), A::one(), A::one(), A::one()];
    }
    [Relation::SumGGtWmWp, Relation::SumGGtWpWm, Relation::SumGtGWpWm, Relation::SumGtGWmWp].map(|r| r.residual(n, 0))
}

/// `Z^∨_n` computed from the generator images.
pub fn zvee_central(n: u32) -> TensorElement {
    zvee_expression(n)
}

/// `Z_n` from `Z_0 = 1` and `Z_n = (Z^∨_n - Σ_{k=1}^{n-1} Z_k Z_{n-k} q^{n-2k}) / (q^n + q^-n)`.
pub fn z_central(n: u32) -> TensorElement {
    let mut zs: Vec<TensorElement> = vec![TensorElement::one()];
    for m in 1..=n as usize {
        let mut num = zvee_central(m as u32);
        for k in 1..m {
            num = num.sub(&zs[k].mul(&zs[m - k]).scale(&RationalFunction::q_pow(m as i64 - 2 * k as i64)));
        }
        zs.push(num.scale(&RationalFunction::q_sym(m as i64).inv().expect("q^n + q^-n is nonzero")));
    }
    zs.swap_remove(n as usize)
}

/// Generators of index at most `bound`, excluding the identities `G_0`, `G~_0`.
pub fn generators_up_to(bound: u32) -> Vec<AltKind> {
    let mut out = Vec::new();
    for tag in [AltTag::Wminus, AltTag::G, AltTag::Gtilde, AltTag::Wplus] {
        for i in 0..=bound {
            let k = AltKind::new(tag, i);
            if !k.is_identity() {
                out.push(k);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralReport {
    pub bound: u32,
    /// Generators that fail to commute, with the commutator.
    pub failures: Vec<(String, String)>,
    pub pass: bool,
}

/// Commutators of `c` with every generator of index at most `bound`.
pub fn central_check(c: &TensorElement, bound: u32) -> CentralReport {
    let failures: Vec<(String, String)> = generators_up_to(bound)
        .into_iter()
        .filter_map(|k| {
            let r = c.comm(&gen_image(k));
            (!r.is_zero()).then(|| (k.to_string(), r.to_string()))
        })
        .collect();
    CentralReport { bound, pass: failures.is_empty(), failures }
}

/// The map to U⁺_q sending every `z_n` to 0.
pub fn gamma(e: &TensorElement) -> FreeElement {
    e.0.map_basis(|k| k.z.is_one().then_some(k.word))
}

/// The map to the polynomial algebra sending every nonempty word to 0.
pub fn eta(e: &TensorElement) -> ZPoly {
    e.0.map_basis(|k| k.word.is_empty().then(|| k.z.clone()))
}

/// The automorphism swapping the two generators.
pub fn sigma_ucal(e: &TensorElement) -> TensorElement {
    e.map_words(Word::swapped)
}

/// The antiautomorphism fixing both generators.
pub fn s_ucal(e: &TensorElement) -> TensorElement {
    e.map_words(Word::reversed)
}

/// The generators rebuilt from `W_0`, `W_1` and the central `Z^∨_n`.
pub fn ucal_recursive_gen(kind: AltKind) -> TensorElement {
    let t = recursive_alternating::<TensorElement>(kind.index, |n| TensorElement::from_zpoly(&polyz::zvee(n)));
    t.get(kind).expect("index within table").clone()
}

/// The cubic q-Serre expressions `[a, [a, [a, b]_q]_{q^-1}]` for `(a, b) = (W_0, W_1)` and `(W_1, W_0)`.
pub fn qserre_residuals<A: AltAlgebra>(a: &A, b: &A) -> [A; 2] {
    let serre = |a: &A, b: &A| {
        let inner = a.qcomm(b);
        let middle = a.mul(&inner).scale(&RationalFunction::q_pow(-1)).sub(&inner.mul(a).scale(&RationalFunction::q()));
        a.comm(&middle)
    };
    [serre(a, b), serre(b, a)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SerreReport {
    pub residuals: [String; 2],
    pub pass: bool,
}

pub fn qserre_w0w1_check() -> SerreReport {
    let [r1, r2] = qserre_residuals(&TensorElement::w(0), &TensorElement::w(1));
    SerreReport { pass: r1.is_zero() && r2.is_zero(), residuals: [r1.to_string(), r2.to_string()] }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KernelMembership {
    pub in_ker_gamma: bool,
    pub in_ker_eta: bool,
}

pub fn kernel_membership(e: &TensorElement) -> KernelMembership {
    KernelMembership {
        in_ker_gamma: e.0.keys().all(|k| !k.z.is_one()),
        in_ker_eta: e.0.keys().all(|k| !k.word.is_empty()),
    }
}

/// Dimension of the `(i, j)` component of the central extension.
pub fn ucal_dim(i: u32, j: u32) -> u64 {
    series::calh_coeff(i, j)
}

/// `e = kernel part + part in the subalgebra generated by W_0, W_1`.
pub fn split_gamma(e: &TensorElement) -> (TensorElement, TensorElement) {
    let sub = TensorElement::from_free(&gamma(e));
    (e.sub(&sub), sub)
}

/// `e = central part + part in the kernel of eta`.
pub fn split_eta(e: &TensorElement) -> (TensorElement, TensorElement) {
    let central = TensorElement::from_zpoly(&eta(e));
    (central.clone(), e.sub(&central))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRankReport {
    pub degree: Bidegree,
    pub products: usize,
    pub rank: usize,
    pub expected: u64,
    pub pass: bool,
}

/// Products `w · Z_m` at degree `(i, j)`, where `w` runs over PBW monomials
/// of U⁺_q rebuilt from `W_0`, `W_1` alone and `Z_m` over monomials in the
/// central `Z_n`. They span the component exactly when the multiplication
/// map is bijective there.
pub fn multiplication_rank_check(i: u32, j: u32) -> ProductRankReport {
    let top = i.max(j);
    let sub = recursive_alternating::<TensorElement>(top, |_| TensorElement::zero());
    let zs: Vec<TensorElement> = (0..=top).map(z_central).collect();
    let mut products = Vec::new();
    for c in 0..=i.min(j) {
        let monos = polyz::monomials_of_weight(c);
        for w in uq_pbw_monomials(i - c, j - c) {
            let wv = w.0.iter().fold(TensorElement::one(), |acc, k| acc.mul(sub.get(*k).expect("in table")));
            for m in &monos {
                let zv = m
                    .factors()
                    .fold(TensorElement::one(), |acc, (n, e)| (0..e).fold(acc, |a, _| a.mul(&zs[n as usize])));
                products.push(wv.mul(&zv).0);
            }
        }
    }
    let rank = linalg::rank_of_combinations(&products);
    let expected = ucal_dim(i, j);
    ProductRankReport {
        degree: Bidegree(i, j),
        products: products.len(),
        rank,
        expected,
        pass: rank == products.len() && rank as u64 == expected,
    }
}
