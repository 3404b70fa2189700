use std::sync::OnceLock;

use altext::rewrite::{
    extract_rules, nf_via_phi, normal_form, normal_form_with, pbw_independence_ucal, pbw_monomials_ucal, FormalCombo,
    FormalWord, RewriteOrder, RuleTable,
};
use altext::ucal::{gen_image, ucal_dim, zvee_expression};
use altext::uqp::{AltAlgebra, AltKind, AltTag};
use altext::{Bidegree, QAlgebra, RationalFunction, Ring};
use proptest::prelude::*;

fn rules() -> &'static RuleTable {
    static RULES: OnceLock<RuleTable> = OnceLock::new();
    RULES.get_or_init(|| extract_rules(8).unwrap())
}

fn fc(s: &str) -> FormalCombo {
    s.parse().unwrap()
}

#[test]
fn table_covers_every_cross_class_pair() {
    // Six families; G_0, G~_0 excluded from the G-type factors.
    let n = 9u32;
    let expected = n * (n - 1) * 2 + (n - 1) * n * 2 + n * n + (n - 1) * (n - 1);
    assert_eq!(rules().len() as u32, expected);
    assert_eq!(rules().truncation(), 17);
}

#[test]
fn rules_hold_in_the_tensor_model() {
    assert!(rules().validate(3).is_empty());
}

#[test]
fn rule_right_sides_are_ordered_and_homogeneous() {
    for (a, b, rhs) in rules().iter() {
        let deg = a.degree() + b.degree();
        for (w, _) in rhs.terms() {
            assert!(w.is_ordered(), "{a}*{b} -> {w}");
            assert_eq!(w.degree(), deg);
        }
    }
}

#[test]
fn rule_table_round_trips_through_json() {
    let t = extract_rules(2).unwrap();
    assert_eq!(RuleTable::from_json(&t.to_json()).unwrap(), t);
}

#[test]
fn disk_cache_is_reused() {
    let dir = std::env::temp_dir().join(format!("altext-test-{}", std::process::id()));
    let a = RuleTable::load_or_extract(2, &dir).unwrap();
    assert!(dir.join("rules-2-5.json").exists());
    let b = RuleTable::load_or_extract(2, &dir).unwrap();
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixtures() {
    let nf = normal_form(&fc("W1*W0"), rules()).unwrap();
    assert_eq!(nf.to_string(), "W0*W1 + (1-q^-2)*G1 - (1-q^-2)*GT1");
    assert_eq!(nf_via_phi(&fc("W1*W0")).unwrap(), nf);
    assert_eq!(normal_form(&fc("W0*W1"), rules()).unwrap(), fc("W0*W1"));

    let c = fc("GT1*W-1*G1");
    let nf = normal_form(&c, rules()).unwrap();
    assert!(nf.is_ordered());
    assert_eq!(nf, nf_via_phi(&c).unwrap());

    let c = fc("GT1*G1 - G1*GT1");
    let nf = normal_form(&c, rules()).unwrap();
    assert_eq!(
        nf,
        normal_form(&rules().get(AltKind::gt(1), AltKind::g(1)).unwrap().sub(&fc("G1*GT1")), rules()).unwrap()
    );
    assert_eq!(nf, nf_via_phi(&c).unwrap());
}

#[test]
fn pbw_counts_and_independence() {
    for total in 0..=7u32 {
        for i in 0..=total {
            let j = total - i;
            assert_eq!(pbw_monomials_ucal(i, j).len() as u64, ucal_dim(i, j), "({i},{j})");
            let r = pbw_independence_ucal(i, j);
            assert!(r.pass, "{r:?}");
        }
    }
    assert_eq!(pbw_independence_ucal(3, 3).rank, 27);
}

#[test]
fn zvee_commutes_formally() {
    for n in 1..=3 {
        let z = zvee_expression::<FormalCombo>(n);
        for tag in [AltTag::Wminus, AltTag::G, AltTag::Gtilde, AltTag::Wplus] {
            for k in 0..=3 {
                let g = FormalCombo::generator(AltKind::new(tag, k));
                let nf = normal_form(&z.comm(&g), rules()).unwrap();
                assert!(nf.is_zero(), "n={n} g={tag:?}{k}: {nf}");
            }
        }
    }
}

/// Independent check of the tensor side: `φ` of a normal form equals `φ` of the input.
#[test]
fn normal_form_preserves_tensor_image() {
    let c = fc("W2*G1*W-1 - q*GT2*W0");
    let nf = normal_form(&c, rules()).unwrap();
    assert_eq!(nf.to_tensor(), c.to_tensor());
    assert_eq!(gen_image(AltKind::w(1)).mul(&gen_image(AltKind::w(0))), fc("W1*W0").to_tensor());
}

fn alphabet() -> Vec<AltKind> {
    let mut out = Vec::new();
    for k in 0..3 {
        out.push(AltKind::new(AltTag::Wminus, k));
        out.push(AltKind::new(AltTag::Wplus, k));
    }
    for k in 1..=3 {
        out.push(AltKind::g(k));
        out.push(AltKind::gt(k));
    }
    out
}

/// A word of degree at most (3, 3) from a list of letter choices.
fn word_from(choices: &[usize]) -> FormalWord {
    let letters = alphabet();
    let mut d = Bidegree(0, 0);
    let mut kinds = Vec::new();
    for &c in choices {
        let k = letters[c % letters.len()];
        let e = d + k.degree();
        if e.0 <= 3 && e.1 <= 3 {
            kinds.push(k);
            d = e;
        }
    }
    FormalWord::new(kinds)
}

fn arb_combo() -> impl Strategy<Value = FormalCombo> {
    proptest::collection::vec((proptest::collection::vec(0usize..12, 0..5), -3i64..4, -2i64..3), 1..4).prop_map(
        |terms| {
            let mut out = FormalCombo::zero();
            for (choices, c, e) in terms {
                let coeff = RationalFunction::monomial(c, e);
                out = out.add(&FormalCombo::word(word_from(&choices)).scale(&coeff));
            }
            out
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn agrees_with_tensor_solve(c in arb_combo()) {
        let nf = normal_form(&c, rules()).unwrap();
        prop_assert!(nf.is_ordered());
        prop_assert_eq!(nf_via_phi(&c).unwrap(), nf);
    }

    #[test]
    fn is_a_projection(c in arb_combo()) {
        let nf = normal_form(&c, rules()).unwrap();
        prop_assert_eq!(normal_form(&nf, rules()).unwrap(), nf);
    }

    #[test]
    fn respects_grading(c in arb_combo()) {
        let nf = normal_form(&c, rules()).unwrap();
        let input = c.grade();
        for (d, part) in nf.grade() {
            prop_assert!(input.contains_key(&d));
            prop_assert_eq!(normal_form(&input[&d], rules()).unwrap(), part);
        }
    }

    #[test]
    fn independent_of_rewrite_order(c in arb_combo()) {
        prop_assert_eq!(
            normal_form_with(&c, rules(), RewriteOrder::Rightmost).unwrap(),
            normal_form(&c, rules()).unwrap()
        );
    }

    #[test]
    fn is_linear(a in arb_combo(), b in arb_combo(), e in -2i64..3) {
        let k = RationalFunction::q_pow(e);
        let lhs = normal_form(&a.add(&b.scale(&k)), rules()).unwrap();
        let rhs = normal_form(&a, rules()).unwrap().add(&normal_form(&b, rules()).unwrap().scale(&k));
        prop_assert_eq!(lhs, rhs);
    }
}
