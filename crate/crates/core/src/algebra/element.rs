use super::generator::{word_to_string, Generator, Word};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Finite linear combination of words. Zero coefficients are never stored.
/// Products built here are plain concatenations; canonical forms come from
/// [`RewriteSystem`](super::RewriteSystem).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::from_word(Vec::new())
    }

    pub fn scalar(c: Scalar) -> Self {
        AlgebraElement::term(c, Vec::new())
    }

    pub fn generator(g: Generator) -> Self {
        AlgebraElement::from_word(vec![g])
    }

    pub fn from_word(w: Word) -> Self {
        AlgebraElement::term(Scalar::one(), w)
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut e = AlgebraElement::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coefficient(&self, w: &[Generator]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Bilinear concatenation without reduction.
    pub fn concat(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut r = AlgebraElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1 * c2);
            }
        }
        r
    }

    /// Scalar part (coefficient of the empty word) when nothing else is present.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

fn needs_parens(c: &Scalar) -> bool {
    let s = c.to_string();
    s.contains(' ') || s.contains('/') && !c.is_constant()
}

/// Serialized as a list of `{word, coefficient}` terms in word order.
impl serde::Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&wire::Term { word: word_to_string(w), coefficient: c })?;
        }
        seq.end()
    }
}

pub(crate) mod wire {
    use crate::scalar::Scalar;

    #[derive(serde::Serialize)]
    pub struct Term<'a> {
        pub word: String,
        pub coefficient: &'a Scalar,
    }

    #[derive(serde::Serialize)]
    pub struct TensorTerm<'a> {
        pub legs: Vec<String>,
        pub coefficient: &'a Scalar,
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let (neg, mag) = match c.as_constant() {
                Some(k) if k.is_real() && k.re < num_rational::BigRational::from_integer(0.into()) => {
                    (true, -c)
                }
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let cs = if needs_parens(&mag) { format!("({mag})") } else { mag.to_string() };
            if w.is_empty() {
                write!(f, "{cs}")?;
            } else if mag.is_one() {
                write!(f, "{}", word_to_string(w))?;
            } else {
                write!(f, "{cs}*{}", word_to_string(w))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn cancellation_removes_terms() {
        let a = AlgebraElement::generator(P(0));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn display() {
        let a = AlgebraElement::from_terms([
            (vec![P(0)], Scalar::from_i64(2)),
            (vec![K, E], -Scalar::one()),
        ]);
        assert_eq!(a.to_string(), "2*P0 - K*E");
        let b = AlgebraElement::term(&Scalar::q() + &Scalar::q_pow(-1), vec![E]);
        assert_eq!(b.to_string(), "(q + q^-1)*E");
    }
}
