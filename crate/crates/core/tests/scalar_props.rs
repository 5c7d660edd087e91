use proptest::prelude::*;
use qsusy_core::{Gq, Scalar};

fn gq() -> impl Strategy<Value = Gq> {
    (-6i64..7, 1i64..5, -3i64..4).prop_map(|(n, d, im)| &Gq::from_ratio(n, d) + &(&Gq::from_i64(im) * &Gq::i()))
}

fn laurent() -> impl Strategy<Value = Scalar> {
    (-3i32..3, prop::collection::vec(gq(), 1..4)).prop_map(|(lo, c)| Scalar::laurent(lo, c))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(a, b)| a.checked_div(&b).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_a_group(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
    }

    #[test]
    fn multiplication_is_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        let round = &a.checked_div(&b).unwrap() * &b;
        prop_assert_eq!(round, a);
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), s0 in 2i64..5) {
        let s0 = Gq::from_i64(s0);
        let lhs = (&a * &b).eval_s(&s0).unwrap();
        prop_assert_eq!(lhs, &a.eval_s(&s0).unwrap() * &b.eval_s(&s0).unwrap());
    }

    #[test]
    fn quantum_integers_tend_to_integers(n in -6i64..7) {
        prop_assert_eq!(Scalar::q_int(n, &Scalar::q()).classical_limit().unwrap(), Gq::from_i64(n));
    }
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    assert!(Scalar::zero().inv().is_err());
}

#[test]
fn poles_are_reported() {
    let x = Scalar::one().checked_div(&(&Scalar::q() - &Scalar::one())).unwrap();
    assert!(x.eval_q(&Gq::one()).is_err());
}
