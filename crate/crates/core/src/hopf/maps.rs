use super::tensor::TensorElement;
use crate::algebra::{word_parity, AlgebraConfig, AlgebraElement, Generator, RewriteSystem, Word};
use crate::error::Result;
use crate::scalar::Scalar;

/// Coproduct, antipode and counit on top of a rewrite system.
///
/// Generator images:
/// `Δ(x) = x⊗I + I⊗x` for P, J, Z, Z*; `Δ(Q) = Q⊗I + 𝔍⊗Q` (same for Q̄);
/// `Δ(E) = E⊗K⁻¹ + K⊗E`, `Δ(F) = F⊗K⁻¹ + K⊗F`; K, K⁻¹ and 𝔍 are group-like.
#[derive(Clone, Debug)]
pub struct StructureMaps {
    rs: RewriteSystem,
}

impl StructureMaps {
    pub fn new(config: AlgebraConfig) -> Result<Self> {
        Ok(StructureMaps { rs: RewriteSystem::new(config)? })
    }

    pub fn from_rewrite(rs: RewriteSystem) -> Self {
        StructureMaps { rs }
    }

    pub fn rs(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn q_r(&self) -> Scalar {
        self.rs.q_r()
    }

    fn w(g: Generator) -> AlgebraElement {
        AlgebraElement::generator(g)
    }

    pub fn coproduct_generator(&self, g: Generator) -> Result<TensorElement> {
        use Generator::*;
        g.validate(self.rs.config().n_susy)?;
        let one = AlgebraElement::one();
        let pair = |a: AlgebraElement, b: AlgebraElement| TensorElement::pure(&[a, b]);
        Ok(match g {
            P(_) | J(..) | Z(..) | Zstar(..) => pair(Self::w(g), one.clone()).add(&pair(one, Self::w(g))),
            Q(..) | Qbar(..) => pair(Self::w(g), one).add(&pair(Self::w(Grading), Self::w(g))),
            E | F => pair(Self::w(g), Self::w(Kinv)).add(&pair(Self::w(K), Self::w(g))),
            K | Kinv | Grading => pair(Self::w(g), Self::w(g)),
        })
    }

    pub fn antipode_generator(&self, g: Generator) -> Result<AlgebraElement> {
        use Generator::*;
        g.validate(self.rs.config().n_susy)?;
        let qr = self.q_r();
        Ok(match g {
            P(_) | J(..) | Z(..) | Zstar(..) | Q(..) | Qbar(..) => AlgebraElement::term(-Scalar::one(), vec![g]),
            E => AlgebraElement::term(-qr.inv().unwrap(), vec![E]),
            F => AlgebraElement::term(-qr, vec![F]),
            K => Self::w(Kinv),
            Kinv => Self::w(K),
            Grading => Self::w(Grading),
        })
    }

    pub fn counit_generator(&self, g: Generator) -> Result<Scalar> {
        use Generator::*;
        g.validate(self.rs.config().n_susy)?;
        Ok(match g {
            K | Kinv | Grading => Scalar::one(),
            _ => Scalar::zero(),
        })
    }

    /// Multiplies two tensors leg by leg and normalises each leg.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        assert_eq!(a.legs(), b.legs(), "leg count mismatch");
        let mut r = TensorElement::zero(a.legs());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let mut legs: Vec<AlgebraElement> = Vec::with_capacity(a.legs());
                for (x, y) in wa.iter().zip(wb) {
                    let mut w = x.clone();
                    w.extend_from_slice(y);
                    legs.push(self.rs.normal_form(&AlgebraElement::from_word(w))?);
                }
                r = r.add(&TensorElement::pure(&legs).scale(&(ca * cb)));
            }
        }
        Ok(r)
    }

    /// Normalises every leg.
    pub fn tensor_normal_form(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut r = TensorElement::zero(t.legs());
        for (ws, c) in t.terms() {
            let legs: Vec<AlgebraElement> = ws
                .iter()
                .map(|w| self.rs.normal_form(&AlgebraElement::from_word(w.clone())))
                .collect::<Result<_>>()?;
            r = r.add(&TensorElement::pure(&legs).scale(c));
        }
        Ok(r)
    }

    pub fn coproduct_word(&self, w: &[Generator]) -> Result<TensorElement> {
        let mut acc = TensorElement::pure(&[AlgebraElement::one(), AlgebraElement::one()]);
        for &g in w {
            acc = self.tensor_mul(&acc, &self.coproduct_generator(g)?)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, a: &AlgebraElement) -> Result<TensorElement> {
        let mut r = TensorElement::zero(2);
        for (w, c) in a.terms() {
            r = r.add(&self.coproduct_word(w)?.scale(c));
        }
        Ok(r)
    }

    pub fn antipode_word(&self, w: &[Generator]) -> Result<AlgebraElement> {
        let images: Vec<AlgebraElement> = w
            .iter()
            .rev()
            .map(|&g| self.antipode_generator(g))
            .collect::<Result<_>>()?;
        self.rs.multiply_all(&images)
    }

    pub fn antipode(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut r = AlgebraElement::zero();
        for (w, c) in a.terms() {
            r = r.add(&self.antipode_word(w)?.scale(c));
        }
        Ok(r)
    }

    pub fn counit_word(&self, w: &[Generator]) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for &g in w {
            acc = &acc * &self.counit_generator(g)?;
        }
        Ok(acc)
    }

    pub fn counit(&self, a: &AlgebraElement) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (w, c) in a.terms() {
            acc = &acc + &(c * &self.counit_word(w)?);
        }
        Ok(acc)
    }

    /// Splits a normal word into its 𝔍-free part and whether it ended in 𝔍.
    fn split_grading(w: &[Generator]) -> (Word, bool) {
        match w.split_last() {
            Some((Generator::Grading, rest)) => (rest.to_vec(), true),
            _ => (w.to_vec(), false),
        }
    }

    /// Multiplies the legs of a tensor left to right. A trailing 𝔍 in one leg
    /// acts by the grading on the next leg only and is then consumed; a 𝔍 in
    /// the last leg acts on the vacuum.
    pub fn contract(&self, t: &TensorElement) -> Result<AlgebraElement> {
        let mut r = AlgebraElement::zero();
        for (ws, c) in t.terms() {
            let split: Vec<(Word, bool)> = ws.iter().map(|w| Self::split_grading(w)).collect();
            let mut sign = 1i8;
            for k in 1..split.len() {
                if split[k - 1].1 {
                    sign *= word_parity(&split[k].0);
                }
            }
            let word: Word = split.into_iter().flat_map(|(w, _)| w).collect();
            let coef = if sign < 0 { -c } else { c.clone() };
            r = r.add(&self.rs.normal_form(&AlgebraElement::term(coef, word))?);
        }
        Ok(r)
    }

    /// `ad x(y) = Σ x₍₁₎ y S(x₍₂₎)`, where a 𝔍 carried by `x₍₁₎` acts on `y`
    /// and a 𝔍 carried by `S(x₍₂₎)` acts on the vacuum.
    pub fn adjoint_action(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let dx = self.coproduct(x)?;
        let y_nf = self.rs.normal_form(y)?;
        let mut r = AlgebraElement::zero();
        for (ws, c) in dx.terms() {
            let (x1, graded) = Self::split_grading(&ws[0]);
            let s2 = self.antipode_word(&ws[1])?;
            for (yw, yc) in y_nf.terms() {
                let sign = if graded && word_parity(yw) < 0 { -Scalar::one() } else { Scalar::one() };
                for (sw, sc) in s2.terms() {
                    let (s2w, _) = Self::split_grading(sw);
                    let mut w = x1.clone();
                    w.extend_from_slice(yw);
                    w.extend_from_slice(&s2w);
                    let coef = &(&(c * yc) * sc) * &sign;
                    r = r.add(&self.rs.normal_form(&AlgebraElement::term(coef, w))?);
                }
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn maps() -> StructureMaps {
        StructureMaps::new(AlgebraConfig::default()).unwrap()
    }

    fn g(x: Generator) -> AlgebraElement {
        AlgebraElement::generator(x)
    }

    #[test]
    fn coproduct_of_momentum_pair() {
        let m = maps();
        let d = m.coproduct(&AlgebraElement::from_word(vec![P(0), P(1)])).unwrap();
        let one = AlgebraElement::one();
        let p01 = AlgebraElement::from_word(vec![P(0), P(1)]);
        let expected = TensorElement::pure(&[p01.clone(), one.clone()])
            .add(&TensorElement::pure(&[g(P(0)), g(P(1))]))
            .add(&TensorElement::pure(&[g(P(1)), g(P(0))]))
            .add(&TensorElement::pure(&[one, p01]));
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_of_e() {
        let d = maps().coproduct(&g(E)).unwrap();
        let expected = TensorElement::pure(&[g(E), g(Kinv)]).add(&TensorElement::pure(&[g(K), g(E)]));
        assert_eq!(d, expected);
    }

    #[test]
    fn antipode_examples() {
        let m = maps();
        let s = m.antipode(&AlgebraElement::from_word(vec![P(0), P(1)])).unwrap();
        assert_eq!(s, m.rs().word(&[P(1), P(0)]).unwrap());
        let s = m.antipode(&AlgebraElement::from_word(vec![K, E])).unwrap();
        let expected = m.rs().word(&[E, Kinv]).unwrap().scale(&-m.q_r().inv().unwrap());
        assert_eq!(s, expected);
        assert!(m.counit(&g(Q(1, 1))).unwrap().is_zero());
    }

    #[test]
    fn adjoint_examples() {
        let m = maps();
        let rs = m.rs();
        let ad = m.adjoint_action(&g(Q(1, 1)), &g(Qbar(1, 1))).unwrap();
        let expected = rs.word(&[Q(1, 1), Qbar(1, 1)]).unwrap().add(&rs.word(&[Qbar(1, 1), Q(1, 1)]).unwrap());
        assert_eq!(ad, expected);
        let ad = m.adjoint_action(&g(Q(1, 1)), &g(P(0))).unwrap();
        let expected = rs.word(&[Q(1, 1), P(0)]).unwrap().sub(&rs.word(&[P(0), Q(1, 1)]).unwrap());
        assert_eq!(ad, expected);
        let ad = m.adjoint_action(&g(K), &g(E)).unwrap();
        assert_eq!(ad, g(E).scale(&m.q_r()));
        assert_eq!(m.adjoint_action(&g(Grading), &g(Q(1, 1))).unwrap(), g(Q(1, 1)).scale(&-Scalar::one()));
        assert_eq!(m.adjoint_action(&g(Grading), &g(P(2))).unwrap(), g(P(2)));
    }

    #[test]
    fn adjoint_of_unit_is_identity() {
        let m = maps();
        for x in m.rs().generators() {
            assert_eq!(m.adjoint_action(&AlgebraElement::one(), &g(x)).unwrap(), g(x));
        }
    }
}
