use proptest::prelude::*;
use qsusy_core::algebra::word_parity;
use qsusy_core::{AlgebraConfig, AlgebraElement, Generator, StructureMaps};
use std::sync::OnceLock;

fn maps() -> &'static StructureMaps {
    static MAPS: OnceLock<StructureMaps> = OnceLock::new();
    MAPS.get_or_init(|| StructureMaps::new(AlgebraConfig::default()).unwrap())
}

fn word(max: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop::sample::select(Generator::all(2)), 0..=max)
}

fn elem(max: usize) -> impl Strategy<Value = AlgebraElement> {
    (word(max), -3i64..4).prop_map(|(w, c)| AlgebraElement::term(c.into(), w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(w in word(4)) {
        let rs = maps().rs();
        let nf = rs.word(&w).unwrap();
        prop_assert_eq!(rs.normal_form(&nf).unwrap(), nf.clone());
        for v in nf.terms().keys() {
            prop_assert!(rs.is_normal_word(v));
        }
    }

    #[test]
    fn multiplication_is_associative(a in elem(2), b in elem(2), c in elem(2)) {
        let rs = maps().rs();
        let left = rs.multiply(&rs.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = rs.multiply(&a, &rs.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reduction_order_does_not_matter(w in word(5), cut in 0usize..6) {
        let rs = maps().rs();
        let cut = cut.min(w.len());
        let (l, r) = w.split_at(cut);
        let split = rs.multiply(&rs.word(l).unwrap(), &rs.word(r).unwrap()).unwrap();
        prop_assert_eq!(split, rs.word(&w).unwrap());
    }

    #[test]
    fn rewriting_preserves_parity(w in word(4)) {
        let nf = maps().rs().word(&w).unwrap();
        for v in nf.terms().keys() {
            prop_assert_eq!(word_parity(v), word_parity(&w));
        }
    }

    #[test]
    fn coproduct_is_multiplicative(a in elem(2), b in elem(2)) {
        let m = maps();
        let ab = m.rs().multiply(&a, &b).unwrap();
        let lhs = m.coproduct(&ab).unwrap();
        let rhs = m.tensor_mul(&m.coproduct(&a).unwrap(), &m.coproduct(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative(a in elem(3), b in elem(3)) {
        let m = maps();
        let ab = m.rs().multiply(&a, &b).unwrap();
        prop_assert_eq!(m.counit(&ab).unwrap(), &m.counit(&a).unwrap() * &m.counit(&b).unwrap());
    }

    #[test]
    fn bialgebra_axioms_hold_on_products(a in elem(2)) {
        prop_assert!(maps().check_bialgebra_axioms(&a).unwrap().passed());
    }
}

#[test]
fn step_budget_is_enforced() {
    let cfg = AlgebraConfig { step_budget: 3, ..Default::default() };
    let m = StructureMaps::new(cfg).unwrap();
    let w = vec![Generator::E, Generator::F, Generator::E, Generator::F, Generator::E];
    assert!(matches!(m.rs().word(&w), Err(qsusy_core::Error::StepBudget(3))));
}

#[test]
fn out_of_range_generators_are_rejected() {
    assert!(Generator::Q(1, 3).validate(2).is_err());
    assert!(Generator::Z(2, 1).validate(2).is_err());
}
