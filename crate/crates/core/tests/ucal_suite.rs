use altext::polyz::{self, z_automorphism, z_from_zvee, zvee, ZMonomial, ZPoly};
use altext::ucal::{
    central_check, eta, four_forms, gamma, gen_image, kernel_membership, multiplication_rank_check, qserre_w0w1_check,
    s_ucal, sigma_ucal, split_eta, split_gamma, ucal_dim, ucal_recursive_gen, ucal_relations, verify_ucal_relation,
    z_central, zvee_central, TensorElement,
};
use altext::uqp::{alt_word, instances, AltAlgebra, AltKind, AltTag, Relation};
use altext::{FreeElement, QAlgebra, RationalFunction, Ring};
use proptest::prelude::*;

const TAGS: [AltTag; 4] = [AltTag::Wminus, AltTag::Wplus, AltTag::G, AltTag::Gtilde];

#[test]
fn every_relation_holds_in_the_extension() {
    for rel in ucal_relations() {
        for (k, l) in instances(rel, 3, 4) {
            let r = verify_ucal_relation(rel, k, l).unwrap();
            assert!(r.pass, "{rel} k={k} l={l}: {}", r.residual);
        }
    }
}

#[test]
fn sum_relations_are_not_relations_of_the_extension() {
    assert!(verify_ucal_relation(Relation::SumGGtWmWp, 1, 0).is_err());
    // The residual is nonzero there: it is the central element.
    let r: TensorElement = Relation::SumGGtWmWp.residual(1, 0);
    assert!(!r.is_zero());
}

#[test]
fn generators_rebuild_recursively() {
    for tag in TAGS {
        for i in 0..=4 {
            let k = AltKind::new(tag, i);
            assert_eq!(ucal_recursive_gen(k), gen_image(k), "{k}");
        }
    }
}

#[test]
fn qserre_holds_for_w0_w1() {
    assert!(qserre_w0w1_check().pass);
}

/// Independent oracle: the tensor image of `Z^∨_n` is `1 ⊗ z^∨_n`.
#[test]
fn zvee_central_is_the_polynomial() {
    for n in 0..=5 {
        assert_eq!(zvee_central(n), TensorElement::from_zpoly(&zvee(n)), "n={n}");
    }
}

#[test]
fn z_central_is_the_variable() {
    for n in 0..=5 {
        assert_eq!(z_central(n), TensorElement::from_zpoly(&ZPoly::zvar(n)), "n={n}");
    }
}

#[test]
fn four_forms_agree() {
    for n in 1..=4 {
        let [a, b, c, d] = four_forms::<TensorElement>(n);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, d);
    }
}

#[test]
fn central_elements_commute_with_generators() {
    for n in 1..=4 {
        assert!(central_check(&zvee_central(n), 4).pass, "zvee {n}");
        assert!(central_check(&z_central(n), 4).pass, "z {n}");
    }
    assert!(!central_check(&gen_image(AltKind::w(0)), 1).pass);
}

#[test]
fn gamma_and_eta_on_generators() {
    for tag in TAGS {
        for i in 0..=4 {
            let k = AltKind::new(tag, i);
            let g = gen_image(k);
            assert_eq!(gamma(&g), alt_word(k));
            // The `G_0 ⊗ z_n` term survives.
            let expected = match tag {
                AltTag::G | AltTag::Gtilde => ZPoly::zvar(i),
                _ => ZPoly::zero(),
            };
            assert_eq!(eta(&g), expected, "{k}");
        }
    }
}

#[test]
fn kernels_of_central_elements() {
    let z = zvee_central(2);
    let km = kernel_membership(&z);
    assert!(km.in_ker_gamma);
    assert!(!km.in_ker_eta);
    let w = gen_image(AltKind::w(0));
    assert!(kernel_membership(&w).in_ker_eta);
}

#[test]
fn splits_reassemble() {
    let e = gen_image(AltKind::g(2)).mul(&gen_image(AltKind::w(1)));
    let (k, s) = split_gamma(&e);
    assert_eq!(k.add(&s), e);
    assert!(kernel_membership(&k).in_ker_gamma);
    let (c, r) = split_eta(&e.add(&zvee_central(2)));
    assert_eq!(c.add(&r), e.add(&zvee_central(2)));
    assert!(kernel_membership(&r).in_ker_eta);
}

#[test]
fn sigma_and_antiautomorphism_on_generators() {
    for tag in TAGS {
        for i in 0..=4 {
            let k = AltKind::new(tag, i);
            assert_eq!(sigma_ucal(&gen_image(k)), gen_image(k.swapped()), "{k}");
            assert_eq!(s_ucal(&gen_image(k)), gen_image(k.reversed()), "{k}");
        }
    }
}

#[test]
fn antiautomorphism_reverses_products() {
    let a = gen_image(AltKind::g(1));
    let b = gen_image(AltKind::w(-1));
    assert_eq!(s_ucal(&a.mul(&b)), s_ucal(&b).mul(&s_ucal(&a)));
    assert_eq!(sigma_ucal(&a.mul(&b)), sigma_ucal(&a).mul(&sigma_ucal(&b)));
}

#[test]
fn multiplication_map_is_bijective() {
    for total in 0..=6u32 {
        for i in 0..=total {
            let r = multiplication_rank_check(i, total - i);
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn small_dimensions() {
    assert_eq!(ucal_dim(1, 1), 3);
    assert_eq!(ucal_dim(2, 2), 10);
    assert_eq!(ucal_dim(0, 5), 1);
}

#[test]
fn generic_algebra_code_matches_free_word_model() {
    let x = TensorElement::w(0);
    let y = TensorElement::w(1);
    let lhs = x.qcomm(&y);
    let expected =
        TensorElement::from_free(&FreeElement::x().qbracket(&FreeElement::y(), altext::freeword::Product::QShuffle));
    assert_eq!(lhs, expected);
    assert_eq!(
        TensorElement::from_scalar(RationalFunction::q()).scale(&RationalFunction::q_pow(-1)),
        TensorElement::one()
    );
}

#[test]
fn z_round_trip() {
    for n in 0..=8 {
        assert_eq!(z_automorphism(&z_from_zvee(n)), ZPoly::zvar(n), "n={n}");
    }
}

#[test]
fn zvee_is_homogeneous_and_symmetric() {
    for n in 0..=8 {
        let p = zvee(n);
        assert!(p.is_homogeneous_of(n));
        // Coefficients are invariant under q -> q^-1.
        for (_, c) in p.iter() {
            assert_eq!(c.bar(), *c);
        }
    }
}

fn arb_zpoly() -> impl Strategy<Value = ZPoly> {
    proptest::collection::vec(((1u32..4, 0u32..3), (1u32..4, 0u32..3), -3i64..4), 1..4).prop_map(|terms| {
        ZPoly::from_terms(
            terms.into_iter().map(|((a, e), (b, f), c)| {
                (ZMonomial::from_exponents(&[(a, e), (b, f)]), RationalFunction::from_int(c))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn automorphism_is_injective(p in arb_zpoly(), r in arb_zpoly()) {
        if p != r {
            prop_assert_ne!(z_automorphism(&p), z_automorphism(&r));
        }
    }

    #[test]
    fn automorphism_is_multiplicative(p in arb_zpoly(), r in arb_zpoly()) {
        prop_assert_eq!(z_automorphism(&p.zmul(&r)), z_automorphism(&p).zmul(&z_automorphism(&r)));
    }

    #[test]
    fn automorphism_preserves_weight(n in 0u32..7) {
        for m in polyz::monomials_of_weight(n) {
            prop_assert!(z_automorphism(&ZPoly::basis(m)).is_homogeneous_of(n));
        }
    }
}
