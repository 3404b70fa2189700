use altext::scalar::{IntPoly, RationalFunction};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| IntPoly::from_i64s(&cs))
}

fn rational() -> impl Strategy<Value = RationalFunction> {
    (small_poly(), small_poly(), -3i64..=3).prop_map(|(n, d, s)| {
        let d = if d.is_zero() { IntPoly::one() } else { d };
        RationalFunction::new(n, d, s).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_associative(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn inverse(a in rational()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn normalisation_is_idempotent(a in rational()) {
        let again = RationalFunction::new(a.numerator().clone(), a.denominator().clone(), a.laurent_shift()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert!(a.denominator().leading().unwrap() > &0.into());
        prop_assert!(a.is_zero() || a.numerator().gcd(a.denominator()).is_one());
        prop_assert!(a.is_zero() || a.numerator().constant_term() != 0.into());
        prop_assert!(a.denominator().constant_term() != 0.into());
    }

    #[test]
    fn qint_addition_law(m in -6i64..=6, n in -6i64..=6) {
        let lhs = RationalFunction::qint(m + n);
        let rhs = RationalFunction::qint(m) * RationalFunction::q_pow(n) + RationalFunction::q_pow(-m) * RationalFunction::qint(n);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(RationalFunction::qint(-m), -RationalFunction::qint(m));
    }

    #[test]
    fn render_parse_round_trip(a in rational()) {
        let back: RationalFunction = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}
