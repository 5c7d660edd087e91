use super::coeff::Coeff;
use super::field::{FieldFactor, FieldKind};
use serde::Serialize;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Grassmann coordinate bits in canonical order `θ¹, θ², θ̄¹, θ̄²` (all upper indices).
const COORD_NAMES: [&str; 4] = ["th1", "th2", "thb1", "thb2"];

/// Integration measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Measure {
    D2Theta,
    D2ThetaBar,
    D4Theta,
}

/// One monomial: Grassmann coordinates (as a bit mask) followed by field factors in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub coords: u8,
    pub fields: Vec<FieldFactor>,
}

/// Polynomial in `θ, θ̄` with component-field coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperExpr {
    terms: BTreeMap<Monomial, Coeff>,
}

fn parity_of(bits: u8) -> u32 {
    bits.count_ones() % 2
}

/// Sign and product of two coordinate masks, `None` when they overlap.
fn merge_coords(a: u8, b: u8) -> Option<(bool, u8)> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for y in 0..4 {
        if b & (1 << y) != 0 {
            swaps += (a >> (y + 1)).count_ones();
        }
    }
    Some((swaps % 2 == 1, a | b))
}

/// Sorts factors, tracking the sign from exchanging fermions. `None` when a fermion repeats.
fn sort_fields(mut f: Vec<FieldFactor>) -> Option<(bool, Vec<FieldFactor>)> {
    let mut neg = false;
    for i in 1..f.len() {
        let mut j = i;
        while j > 0 && f[j - 1] > f[j] {
            if f[j - 1].is_fermionic() && f[j].is_fermionic() {
                neg = !neg;
            }
            f.swap(j - 1, j);
            j -= 1;
        }
    }
    if f.windows(2).any(|w| w[0] == w[1] && w[0].is_fermionic()) {
        return None;
    }
    Some((neg, f))
}

fn fermion_count(f: &[FieldFactor]) -> u32 {
    f.iter().filter(|x| x.is_fermionic()).count() as u32
}

impl SuperExpr {
    pub fn zero() -> Self {
        SuperExpr::default()
    }

    pub fn constant(c: Coeff) -> Self {
        let mut e = SuperExpr::zero();
        e.add_term(Monomial { coords: 0, fields: vec![] }, c);
        e
    }

    pub fn one() -> Self {
        SuperExpr::constant(Coeff::one())
    }

    /// A single Grassmann coordinate.
    pub fn coord(bit: u8) -> Self {
        assert!(bit < 4);
        let mut e = SuperExpr::zero();
        e.add_term(Monomial { coords: 1 << bit, fields: vec![] }, Coeff::one());
        e
    }

    pub fn field(f: FieldFactor) -> Self {
        let mut e = SuperExpr::zero();
        e.add_term(Monomial { coords: 0, fields: vec![f] }, Coeff::one());
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut e = SuperExpr::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    /// Adds `c·m`; `m.fields` need not be sorted.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let Some((neg, fields)) = sort_fields(m.fields) else { return };
        let c = if neg { -&c } else { c };
        let key = Monomial { coords: m.coords, fields };
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Coeff> {
        &self.terms
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

    pub fn max_grassmann_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.coords.count_ones()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &SuperExpr) -> SuperExpr {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &SuperExpr) -> SuperExpr {
        self.add(&o.scale(&Coeff::from(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> SuperExpr {
        if c.is_zero() {
            return SuperExpr::zero();
        }
        SuperExpr { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &SuperExpr) -> SuperExpr {
        let mut r = SuperExpr::zero();
        for (m1, c1) in &self.terms {
            let nf = fermion_count(&m1.fields);
            for (m2, c2) in &o.terms {
                let Some((neg, coords)) = merge_coords(m1.coords, m2.coords) else { continue };
                // moving m2's coordinates left past m1's fields
                let neg = neg ^ (parity_of(m2.coords) * nf % 2 == 1);
                let mut fields = m1.fields.clone();
                fields.extend_from_slice(&m2.fields);
                let c = c1 * c2;
                r.add_term(Monomial { coords, fields }, if neg { -&c } else { c });
            }
        }
        r
    }

    pub fn product(factors: &[SuperExpr]) -> SuperExpr {
        factors.iter().fold(SuperExpr::one(), |acc, f| acc.mul(f))
    }

    /// Spacetime derivative `∂_μ`.
    pub fn partial(&self, mu: usize) -> SuperExpr {
        let mut r = SuperExpr::zero();
        for (m, c) in &self.terms {
            for k in 0..m.fields.len() {
                let mut fields = m.fields.clone();
                fields[k] = fields[k].differentiated(mu);
                r.add_term(Monomial { coords: m.coords, fields }, c.clone());
            }
        }
        r
    }

    /// Left derivative with respect to a Grassmann coordinate.
    pub fn d_coord(&self, bit: u8) -> SuperExpr {
        let mut r = SuperExpr::zero();
        for (m, c) in &self.terms {
            if m.coords & (1 << bit) == 0 {
                continue;
            }
            let below = (m.coords & ((1 << bit) - 1)).count_ones();
            let c = if below % 2 == 1 { -c } else { c.clone() };
            r.add_term(Monomial { coords: m.coords & !(1 << bit), fields: m.fields.clone() }, c);
        }
        r
    }

    /// Coefficient of a coordinate monomial, as a Grassmann-free expression.
    pub fn component(&self, coords: u8) -> SuperExpr {
        SuperExpr::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.coords == coords)
                .map(|(m, c)| (Monomial { coords: 0, fields: m.fields.clone() }, c.clone())),
        )
    }

    /// Berezin integral, normalised by `∫d²θ θθ = ∫d²θ̄ θ̄θ̄ = 1` with
    /// `θθ = −2θ¹θ²` and `θ̄θ̄ = 2θ̄¹θ̄²`.
    pub fn berezin(&self, measure: Measure) -> SuperExpr {
        let (pair, factor) = match measure {
            Measure::D2Theta => (0b0011u8, Coeff::ratio(-1, 2)),
            Measure::D2ThetaBar => (0b1100, Coeff::ratio(1, 2)),
            Measure::D4Theta => (0b1111, Coeff::ratio(-1, 4)),
        };
        SuperExpr::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.coords & pair == pair)
                .map(|(m, c)| (Monomial { coords: m.coords & !pair, fields: m.fields.clone() }, c * &factor)),
        )
    }

    /// Hermitian conjugation: reverses the order of all factors, conjugates
    /// coefficients and maps `θ ↔ θ̄`, `φ ↔ φ†`, `ψ ↔ ψ̄`, `λ ↔ λ̄`.
    pub fn conj(&self) -> SuperExpr {
        let mut r = SuperExpr::zero();
        for (m, c) in &self.terms {
            let mut factors = vec![SuperExpr::constant(c.conj())];
            factors.extend(m.fields.iter().rev().map(|f| SuperExpr::field(f.conj())));
            factors.extend((0..4u8).rev().filter(|b| m.coords & (1 << b) != 0).map(|b| SuperExpr::coord(b ^ 2)));
            r = r.add(&SuperExpr::product(&factors));
        }
        r
    }

    /// Highest total field degree among the terms.
    pub fn field_degree(&self) -> usize {
        self.terms.keys().map(|m| m.fields.len()).max().unwrap_or(0)
    }

    pub fn map_fields(&self, f: impl Fn(&Monomial, &Coeff) -> Option<(Monomial, Coeff)>) -> SuperExpr {
        SuperExpr::from_terms(self.terms.iter().filter_map(|(m, c)| f(m, c)))
    }

    /// Terms whose fields all have kinds in `kinds`.
    pub fn restrict(&self, kinds: &[FieldKind]) -> SuperExpr {
        self.map_fields(|m, c| m.fields.iter().all(|f| kinds.contains(&f.kind)).then(|| (m.clone(), c.clone())))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = (0..4).filter(|b| self.coords & (1 << b) != 0).map(|b| COORD_NAMES[b].to_string()).collect();
        parts.extend(self.fields.iter().map(ToString::to_string));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for SuperExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    coefficient: &'a Coeff,
    coords: Vec<&'static str>,
    fields: &'a [FieldFactor],
}

/// Serialized as a term list: coefficient, coordinate names and fields with their indices and derivatives.
impl Serialize for SuperExpr {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.terms.iter().map(|(m, c)| TermOut {
            coefficient: c,
            coords: (0..4).filter(|b| m.coords & (1 << b) != 0).map(|b| COORD_NAMES[b]).collect(),
            fields: &m.fields,
        }))
    }
}
