use crate::algebra::{word_to_string, AlgebraElement, Word};
use crate::scalar::Scalar;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Linear combination of pure tensors `w₁ ⊗ … ⊗ wₙ` of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    legs: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(legs: usize) -> Self {
        TensorElement { legs, terms: BTreeMap::new() }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: Scalar) {
        assert_eq!(legs.len(), self.legs, "leg count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `a₁ ⊗ … ⊗ aₙ` for algebra elements.
    pub fn pure(factors: &[AlgebraElement]) -> Self {
        let mut acc: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * d));
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero(factors.len());
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        for (ws, c) in &o.terms {
            r.add_term(ws.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut r = TensorElement::zero(self.legs);
        for (ws, d) in &self.terms {
            r.add_term(ws.clone(), d * c);
        }
        r
    }

    /// Appends the legs of `o` after the legs of `self`.
    pub fn tensor(&self, o: &TensorElement) -> TensorElement {
        let mut r = TensorElement::zero(self.legs + o.legs);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut ws = a.clone();
                ws.extend(b.iter().cloned());
                r.add_term(ws, c * d);
            }
        }
        r
    }

    /// Exchanges two legs.
    pub fn swap_legs(&self, i: usize, j: usize) -> TensorElement {
        let mut r = TensorElement::zero(self.legs);
        for (ws, c) in &self.terms {
            let mut ws = ws.clone();
            ws.swap(i, j);
            r.add_term(ws, c.clone());
        }
        r
    }

    /// Applies a linear map `f` to leg `i`, where `f` may produce several legs.
    pub fn map_leg<E>(
        &self,
        i: usize,
        out_legs: usize,
        mut f: impl FnMut(&Word) -> Result<TensorElement, E>,
    ) -> Result<TensorElement, E> {
        let mut r = TensorElement::zero(self.legs - 1 + out_legs);
        for (ws, c) in &self.terms {
            let img = f(&ws[i])?;
            for (piece, d) in img.terms() {
                let mut nw = ws[..i].to_vec();
                nw.extend(piece.iter().cloned());
                nw.extend(ws[i + 1..].iter().cloned());
                r.add_term(nw, c * d);
            }
        }
        Ok(r)
    }

    /// Collapses a one-leg tensor to an algebra element.
    pub fn to_element(&self) -> AlgebraElement {
        assert_eq!(self.legs, 1);
        AlgebraElement::from_terms(self.terms.iter().map(|(ws, c)| (ws[0].clone(), c.clone())))
    }

    pub fn from_element(a: &AlgebraElement) -> TensorElement {
        TensorElement::pure(std::slice::from_ref(a))
    }
}

impl serde::Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use crate::algebra::element::wire::TensorTerm;
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (ws, c) in &self.terms {
            let legs = ws.iter().map(|w| crate::algebra::word_to_string(w)).collect();
            seq.serialize_element(&TensorTerm { legs, coefficient: c })?;
        }
        seq.end()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(ws, c)| {
                let t = ws.iter().map(|w| word_to_string(w)).collect::<Vec<_>>().join(" @ ");
                if c.is_one() {
                    t
                } else {
                    format!("({c})*({t})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
