use altext::freeword::{FreeElement, Letter, Product, Word};
use altext::RationalFunction;
use proptest::prelude::*;

/// Literal recursion `(au)*(bv) = a(u*bv) + q^(<a,b> + <u,b>) b(au*v)` on letter vectors.
fn naive_shuffle(u: &[Letter], v: &[Letter]) -> FreeElement {
    if u.is_empty() || v.is_empty() {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        return FreeElement::word(Word::from_letters(&w));
    }
    let (a, rest_u) = (u[0], &u[1..]);
    let (b, rest_v) = (v[0], &v[1..]);
    let left = FreeElement::letter(a).concat(&naive_shuffle(rest_u, v));
    let e: i32 = a.pairing(b) + rest_u.iter().map(|c| c.pairing(b)).sum::<i32>();
    let right = FreeElement::letter(b).concat(&naive_shuffle(u, rest_v));
    left + right.scale(&RationalFunction::q_pow(e as i64))
}

fn letters(w: &Word) -> Vec<Letter> {
    w.letters().collect()
}

fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 0..=max).prop_map(|v| Word::from_letters(&v))
}

fn w(s: &str) -> FreeElement {
    s.parse().unwrap()
}

fn star(parts: &[&FreeElement]) -> FreeElement {
    parts.iter().fold(FreeElement::one(), |acc, p| acc.qshuffle(p))
}

#[test]
fn q_serre_relations_hold_under_shuffle() {
    let q3 = RationalFunction::qint(3);
    for (a, b) in [(w("x"), w("y")), (w("y"), w("x"))] {
        let r = star(&[&a, &a, &a, &b]) - star(&[&a, &a, &b, &a]).scale(&q3) + star(&[&a, &b, &a, &a]).scale(&q3)
            - star(&[&b, &a, &a, &a]);
        assert!(r.is_zero(), "residual {r}");
    }
}

#[test]
fn q_serre_in_nested_bracket_form() {
    // [A,[A,[A,B]_q]_{q^-1}] with the q^-1 bracket spelled out.
    let p = Product::QShuffle;
    for (a, b) in [(w("x"), w("y")), (w("y"), w("x"))] {
        let ab = a.qbracket(&b, p);
        let inner =
            a.product(&ab, p).scale(&RationalFunction::q_pow(-1)) - ab.product(&a, p).scale(&RationalFunction::q());
        assert!(a.bracket(&inner, p).is_zero());
    }
}

#[test]
fn dp_matches_recursion_on_all_short_pairs() {
    for lu in 0..=4 {
        for lv in 0..=4 {
            for bu in 0..(1u32 << lu) {
                for bv in 0..(1u32 << lv) {
                    let mk = |bits: u32, len: usize| {
                        let v: Vec<Letter> =
                            (0..len).map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X }).collect();
                        Word::from_letters(&v)
                    };
                    let (u, v) = (mk(bu, lu), mk(bv, lv));
                    let fast = FreeElement::word(u).qshuffle(&FreeElement::word(v));
                    assert_eq!(fast, naive_shuffle(&letters(&u), &letters(&v)), "{u} * {v}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_recursion(u in word_strategy(6), v in word_strategy(6)) {
        let fast = FreeElement::word(u).qshuffle(&FreeElement::word(v));
        prop_assert_eq!(fast, naive_shuffle(&letters(&u), &letters(&v)));
    }

    #[test]
    fn shuffle_is_associative(u in word_strategy(4), v in word_strategy(4), x in word_strategy(4)) {
        let (u, v, x) = (FreeElement::word(u), FreeElement::word(v), FreeElement::word(x));
        prop_assert_eq!(u.qshuffle(&v).qshuffle(&x), u.qshuffle(&v.qshuffle(&x)));
    }

    #[test]
    fn shuffle_respects_grading(u in word_strategy(5), v in word_strategy(5)) {
        let target = u.degree() + v.degree();
        let p = FreeElement::word(u).qshuffle(&FreeElement::word(v));
        prop_assert!(p.keys().all(|t| t.degree() == target));
    }

    #[test]
    fn letter_swap_is_multiplicative(u in word_strategy(4), v in word_strategy(4)) {
        let (u, v) = (FreeElement::word(u), FreeElement::word(v));
        prop_assert_eq!(u.qshuffle(&v).letter_swap(), u.letter_swap().qshuffle(&v.letter_swap()));
    }

    #[test]
    fn reverse_is_antimultiplicative(u in word_strategy(4), v in word_strategy(4)) {
        let (u, v) = (FreeElement::word(u), FreeElement::word(v));
        prop_assert_eq!(u.qshuffle(&v).reverse(), v.reverse().qshuffle(&u.reverse()));
    }

    #[test]
    fn render_parse_round_trip(u in word_strategy(5), v in word_strategy(5)) {
        let e = FreeElement::word(u).qshuffle(&FreeElement::word(v));
        let back: FreeElement = e.to_string().parse().unwrap();
        prop_assert_eq!(back, e);
    }
}
