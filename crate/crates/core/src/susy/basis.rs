use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Basis element of the supersymmetry algebra. Indices follow [`Generator`];
/// `T(a)` with `a ∈ 1..=3` labels the quantum Lie generators `T⁺, T⁰, T⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisSymbol {
    P(u8),
    J(u8, u8),
    Q(u8, u8),
    Qbar(u8, u8),
    Z(u8, u8),
    Zstar(u8, u8),
    T(u8),
}

impl BasisSymbol {
    pub fn parity(self) -> i8 {
        match self {
            BasisSymbol::Q(..) | BasisSymbol::Qbar(..) => -1,
            _ => 1,
        }
    }

    pub fn is_quantum(self) -> bool {
        matches!(self, BasisSymbol::T(_))
    }

    pub fn validate(self, n_susy: u8) -> Result<Self> {
        if let BasisSymbol::T(a) = self {
            return if (1..=3).contains(&a) {
                Ok(self)
            } else {
                Err(Error::IndexOutOfRange(format!("{self}")))
            };
        }
        self.to_generator().unwrap().validate(n_susy).map(|_| self)
    }

    pub fn to_generator(self) -> Option<Generator> {
        Some(match self {
            BasisSymbol::P(m) => Generator::P(m),
            BasisSymbol::J(m, n) => Generator::J(m, n),
            BasisSymbol::Q(a, i) => Generator::Q(a, i),
            BasisSymbol::Qbar(a, i) => Generator::Qbar(a, i),
            BasisSymbol::Z(i, j) => Generator::Z(i, j),
            BasisSymbol::Zstar(i, j) => Generator::Zstar(i, j),
            BasisSymbol::T(_) => return None,
        })
    }

    pub fn from_generator(g: Generator) -> Option<Self> {
        Some(match g {
            Generator::P(m) => BasisSymbol::P(m),
            Generator::J(m, n) => BasisSymbol::J(m, n),
            Generator::Q(a, i) => BasisSymbol::Q(a, i),
            Generator::Qbar(a, i) => BasisSymbol::Qbar(a, i),
            Generator::Z(i, j) => BasisSymbol::Z(i, j),
            Generator::Zstar(i, j) => BasisSymbol::Zstar(i, j),
            _ => return None,
        })
    }

    /// Classical symbols for `n_susy` supersymmetries, in a fixed order.
    pub fn classical(n_susy: u8) -> Vec<BasisSymbol> {
        Generator::all(n_susy)
            .into_iter()
            .filter_map(BasisSymbol::from_generator)
            .collect()
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_generator() {
            Some(g) => write!(f, "{g}"),
            None => match self {
                BasisSymbol::T(a) => write!(f, "T[{a}]"),
                _ => unreachable!(),
            },
        }
    }
}

/// Linear combination of basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb(BTreeMap<BasisSymbol, Scalar>);

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn single(x: BasisSymbol, c: Scalar) -> Self {
        let mut l = LinComb::zero();
        l.add(x, c);
        l
    }

    pub fn add(&mut self, x: BasisSymbol, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = self.0.remove(&x).map_or(c.clone(), |old| &old + &c);
        if !v.is_zero() {
            self.0.insert(x, v);
        }
    }

    pub fn add_scaled(&mut self, o: &LinComb, c: &Scalar) {
        for (x, v) in &o.0 {
            self.add(*x, v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinComb {
        let mut r = LinComb::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisSymbol, &Scalar)> {
        self.0.iter()
    }

    pub fn get(&self, x: &BasisSymbol) -> Scalar {
        self.0.get(x).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `J_{mn}` with antisymmetry resolved.
    pub fn j(m: usize, n: usize, c: Scalar) -> LinComb {
        use std::cmp::Ordering::*;
        match m.cmp(&n) {
            Less => LinComb::single(BasisSymbol::J(m as u8, n as u8), c),
            Greater => LinComb::single(BasisSymbol::J(n as u8, m as u8), -c),
            Equal => LinComb::zero(),
        }
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(x, c)| format!("({c})*{x}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
