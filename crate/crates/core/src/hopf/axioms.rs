use super::maps::StructureMaps;
use super::tensor::TensorElement;
use crate::algebra::{AlgebraElement, Generator};
use crate::error::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraReport {
    pub element: String,
    pub coassociative: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub witness: Option<String>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.coassociative && self.counit_left && self.counit_right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemiHopfClass {
    OddType,
    EvenType,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiHopfReport {
    pub element: String,
    pub classification: SemiHopfClass,
    /// `m(id⊗id)Δ(a) = ε(a)I`
    pub odd_condition: bool,
    /// `m(S⊗id)Δ(a) = ε(a)I`
    pub even_condition_left: bool,
    /// `m(id⊗S)Δ(a) = ε(a)I`
    pub even_condition_right: bool,
    pub odd_defect: String,
    pub even_defect_left: String,
    pub even_defect_right: String,
}

impl SemiHopfReport {
    /// Both conditions hold (only group-like involutions such as I and 𝔍).
    pub fn degenerate(&self) -> bool {
        self.odd_condition && self.even_condition_left && self.even_condition_right
    }
}

impl StructureMaps {
    fn delta_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        t.map_leg(leg, 2, |w| self.coproduct_word(w))
    }

    fn counit_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        t.map_leg(leg, 0, |w| {
            let mut r = TensorElement::zero(0);
            r.add_term(Vec::new(), self.counit_word(w)?);
            Ok(r)
        })
    }

    fn antipode_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        t.map_leg(leg, 1, |w| Ok(TensorElement::from_element(&self.antipode_word(w)?)))
    }

    /// Coassociativity and the counit axiom on one element.
    pub fn check_bialgebra_axioms(&self, a: &AlgebraElement) -> Result<BialgebraReport> {
        let a = self.rs().normal_form(a)?;
        let d = self.coproduct(&a)?;
        let lhs = self.delta_on_leg(&d, 0)?;
        let rhs = self.delta_on_leg(&d, 1)?;
        let coassoc_defect = lhs.sub(&rhs);
        let left = self.counit_on_leg(&d, 0)?.to_element();
        let right = self.counit_on_leg(&d, 1)?.to_element();
        let left_defect = self.rs().normal_form(&left.sub(&a))?;
        let right_defect = self.rs().normal_form(&right.sub(&a))?;
        let mut witness = None;
        if !coassoc_defect.is_zero() {
            witness = Some(format!("(Δ⊗id)Δ − (id⊗Δ)Δ = {coassoc_defect}"));
        } else if !left_defect.is_zero() {
            witness = Some(format!("(ε⊗id)Δ − id = {left_defect}"));
        } else if !right_defect.is_zero() {
            witness = Some(format!("(id⊗ε)Δ − id = {right_defect}"));
        }
        Ok(BialgebraReport {
            element: a.to_string(),
            coassociative: coassoc_defect.is_zero(),
            counit_left: left_defect.is_zero(),
            counit_right: right_defect.is_zero(),
            witness,
        })
    }

    pub fn check_bialgebra_generator(&self, g: Generator) -> Result<BialgebraReport> {
        self.check_bialgebra_axioms(&AlgebraElement::generator(g))
    }

    /// Odd-type if `m(id⊗id)Δ(a) = ε(a)I`; even-type if both antipode orders give `ε(a)I`.
    /// When both hold the element is reported even-type with `degenerate()`.
    pub fn check_semi_hopf(&self, a: &AlgebraElement) -> Result<SemiHopfReport> {
        let a = self.rs().normal_form(a)?;
        let d = self.coproduct(&a)?;
        let target = AlgebraElement::scalar(self.counit(&a)?);
        let odd = self.contract(&d)?.sub(&target);
        let even_l = self.contract(&self.antipode_on_leg(&d, 0)?)?.sub(&target);
        let even_r = self.contract(&self.antipode_on_leg(&d, 1)?)?.sub(&target);
        let (o, l, r) = (odd.is_zero(), even_l.is_zero(), even_r.is_zero());
        let classification = if l && r {
            SemiHopfClass::EvenType
        } else if o {
            SemiHopfClass::OddType
        } else {
            SemiHopfClass::Neither
        };
        Ok(SemiHopfReport {
            element: if a.is_zero() { "0".into() } else { a.to_string() },
            classification,
            odd_condition: o,
            even_condition_left: l,
            even_condition_right: r,
            odd_defect: odd.to_string(),
            even_defect_left: even_l.to_string(),
            even_defect_right: even_r.to_string(),
        })
    }

    /// Hopf antipode axiom `m(S⊗id)Δ = m(id⊗S)Δ = ε·I` with the plain product.
    pub fn check_antipode_axiom(&self, a: &AlgebraElement) -> Result<bool> {
        let d = self.coproduct(a)?;
        let target = AlgebraElement::scalar(self.counit(a)?);
        for leg in 0..2 {
            let t = self.antipode_on_leg(&d, leg)?;
            let mut acc = AlgebraElement::zero();
            for (ws, c) in t.terms() {
                let w: Vec<Generator> = ws.concat();
                acc = acc.add(&self.rs().normal_form(&AlgebraElement::term(c.clone(), w))?);
            }
            if acc != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks that Δ and ε respect every rewrite rule `xy → Σ c·w`.
    /// Returns the rules that fail, with the coproduct defect.
    pub fn check_relations_respected(&self) -> Result<Vec<(String, String)>> {
        let mut failures = Vec::new();
        for ((x, y), rhs) in self.rs().rules() {
            let lhs = self.tensor_mul(&self.coproduct_generator(x)?, &self.coproduct_generator(y)?)?;
            let mut r = TensorElement::zero(2);
            let mut eps_r = crate::scalar::Scalar::zero();
            for (c, w) in rhs {
                r = r.add(&self.coproduct_word(w)?.scale(c));
                eps_r = &eps_r + &(c * &self.counit_word(w)?);
            }
            let defect = self.tensor_normal_form(&lhs.sub(&r))?;
            let eps_l = &self.counit_generator(x)? * &self.counit_generator(y)?;
            if !defect.is_zero() || eps_l != eps_r {
                failures.push((format!("{x}*{y}"), defect.to_string()));
            }
        }
        Ok(failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraConfig;
    use Generator::*;

    fn maps() -> StructureMaps {
        StructureMaps::new(AlgebraConfig::default()).unwrap()
    }

    fn class(g: Generator) -> SemiHopfClass {
        maps().check_semi_hopf(&AlgebraElement::generator(g)).unwrap().classification
    }

    #[test]
    fn classification_examples() {
        assert_eq!(class(Q(1, 1)), SemiHopfClass::OddType);
        assert_eq!(class(P(0)), SemiHopfClass::EvenType);
        assert_eq!(class(E), SemiHopfClass::EvenType);
        let r = maps().check_semi_hopf(&AlgebraElement::generator(P(0))).unwrap();
        assert!(!r.odd_condition);
    }

    #[test]
    fn unit_and_grading_are_degenerate() {
        let m = maps();
        assert!(m.check_semi_hopf(&AlgebraElement::one()).unwrap().degenerate());
        assert!(m.check_semi_hopf(&AlgebraElement::generator(Grading)).unwrap().degenerate());
    }

    #[test]
    fn bialgebra_examples() {
        let m = maps();
        for g in [K, Q(1, 1), E] {
            assert!(m.check_bialgebra_generator(g).unwrap().passed(), "{g}");
        }
    }

    #[test]
    fn relations_respected() {
        assert_eq!(maps().check_relations_respected().unwrap(), vec![]);
    }

    #[test]
    fn spec_presentation_is_not_respected() {
        // [E,F] = (K − K⁻¹)/(q_r^{1/2} − q_r^{−1/2}) is incompatible with Δ(E) = E⊗K⁻¹ + K⊗E.
        let mut m = maps();
        let h = m.rs().config().half_qr();
        let d = (&h - &h.inv().unwrap()).inv().unwrap();
        let mut rs = m.rs().clone();
        rs.set_rule(E, F, vec![(crate::scalar::Scalar::one(), vec![F, E]), (d.clone(), vec![K]), (-d, vec![Kinv])]);
        m = StructureMaps::from_rewrite(rs);
        let fails = m.check_relations_respected().unwrap();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].0, "E*F");
    }
}
