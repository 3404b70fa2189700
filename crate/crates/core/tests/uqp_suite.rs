use altext::freeword::{FreeElement, Product};
use altext::linalg;
use altext::uqp::{
    alt_recursive, alt_word, independence_check_uq, instances, uq_dim, uq_pbw_monomials, verify_uqp_relation, AltKind,
    AltTag, Relation, UqElement,
};
use altext::{Bidegree, RationalFunction, Ring};

const TAGS: [AltTag; 4] = [AltTag::Wminus, AltTag::Wplus, AltTag::G, AltTag::Gtilde];

fn fe(s: &str) -> FreeElement {
    s.parse().unwrap()
}

#[test]
fn recursion_rebuilds_every_alternating_word() {
    for tag in TAGS {
        for i in 0..=6 {
            let k = AltKind::new(tag, i);
            assert_eq!(alt_recursive(k), alt_word(k), "{k}");
        }
    }
}

#[test]
fn degrees_follow_the_alternating_pattern() {
    for tag in TAGS {
        for i in 0..=6 {
            let k = AltKind::new(tag, i);
            let (w, _) = alt_word(k).iter().next().map(|(w, c)| (*w, c.clone())).unwrap();
            assert_eq!(w.degree(), k.degree());
        }
    }
    assert_eq!(AltKind::w(-1).degree(), Bidegree(2, 1));
}

#[test]
fn symmetries_permute_alternating_words() {
    for tag in TAGS {
        for i in 0..=5 {
            let k = AltKind::new(tag, i);
            assert_eq!(alt_word(k).letter_swap(), alt_word(k.swapped()));
            assert_eq!(alt_word(k).reverse(), alt_word(k.reversed()));
        }
    }
}

#[test]
fn worked_residuals() {
    // [W0, W1] = (1 - q^-2)(xy - yx)
    let p = Product::QShuffle;
    let one_minus = RationalFunction::one() - RationalFunction::q_pow(-2);
    assert_eq!(fe("x").bracket(&fe("y"), p), (fe("xy") - fe("yx")).scale(&one_minus));
    assert_eq!(fe("x").qbracket(&fe("y"), Product::Concat), fe("q*xy - q^-1*yx"));
    // q yx*y - q^-1 y*yx = (q - q^-1) yxy
    let lhs = fe("yx").qbracket(&fe("y"), p);
    assert_eq!(lhs, fe("yxy").scale(&(RationalFunction::q() - RationalFunction::q_pow(-1))));
    // first sum identity at n = 1
    let r: UqElement = Relation::SumGGtWmWp.residual(1, 0);
    assert!(r.is_zero());
}

#[test]
fn every_relation_vanishes_for_small_indices() {
    for rel in Relation::ALL {
        for (k, l) in instances(*rel, 3, 4) {
            let r = verify_uqp_relation(*rel, k, l);
            assert!(r.pass, "{} k={k} l={l}: {}", rel.name(), r.residual);
        }
    }
}

#[test]
fn pbw_counts_match_dimensions() {
    for i in 0..=6 {
        for j in 0..=6 {
            assert_eq!(uq_pbw_monomials(i, j).len() as u64, uq_dim(i, j), "({i},{j})");
        }
    }
    assert_eq!(uq_dim(1, 1), 2);
    assert_eq!(uq_dim(0, 0), 1);
}

/// Independent oracle: the span of all shuffle products of letters in a degree
/// equals the image of U⁺_q there, so its rank must match the series coefficient.
#[test]
fn dimensions_match_spanning_products() {
    fn products(i: u32, j: u32) -> Vec<FreeElement> {
        if i == 0 && j == 0 {
            return vec![FreeElement::one()];
        }
        let mut out = Vec::new();
        if i > 0 {
            out.extend(products(i - 1, j).into_iter().map(|p| p.qshuffle(&FreeElement::x())));
        }
        if j > 0 {
            out.extend(products(i, j - 1).into_iter().map(|p| p.qshuffle(&FreeElement::y())));
        }
        out
    }
    for (i, j) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        assert_eq!(linalg::rank_of_combinations(&products(i, j)) as u64, uq_dim(i, j), "({i},{j})");
    }
}

#[test]
fn pbw_monomials_are_independent() {
    for total in 0..=7u32 {
        for i in 0..=total {
            let r = independence_check_uq(i, total - i);
            assert!(r.pass, "{r:?}");
        }
    }
}
