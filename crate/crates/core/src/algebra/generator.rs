use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Generators of the algebra. The derived `Ord` is the PBW sort order:
/// Z* < Z < P < J < Q < Q̄ < K⁻¹ < K < F < E < 𝔍.
///
/// Spinor and flavour indices are 1-based; Lorentz indices run over 0..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// `Z*_{IJ}` with `I < J`
    Zstar(u8, u8),
    /// `Z^{IJ}` with `I < J`
    Z(u8, u8),
    P(u8),
    /// `J_{μν}` with `μ < ν`
    J(u8, u8),
    /// `Q_α^I`
    Q(u8, u8),
    /// `Q̄_α̇I`
    Qbar(u8, u8),
    Kinv,
    K,
    F,
    E,
    /// The grading element 𝔍.
    Grading,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Poincare,
    Susy,
    Center,
    Quantum,
    Grading,
    Unit,
}

impl Generator {
    pub fn parity(self) -> i8 {
        match self {
            Generator::Q(..) | Generator::Qbar(..) => -1,
            _ => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() < 0
    }

    pub fn sector(self) -> Sector {
        use Generator::*;
        match self {
            P(_) | J(..) => Sector::Poincare,
            Q(..) | Qbar(..) => Sector::Susy,
            Z(..) | Zstar(..) => Sector::Center,
            K | Kinv | E | F => Sector::Quantum,
            Grading => Sector::Grading,
        }
    }

    /// Generators of U_q(sl2).
    pub fn is_quantum(self) -> bool {
        self.sector() == Sector::Quantum
    }

    /// Symmetry-algebra generators that carry a bracket-table entry.
    pub fn is_classical(self) -> bool {
        matches!(self.sector(), Sector::Poincare | Sector::Susy | Sector::Center)
    }

    pub fn validate(self, n_susy: u8) -> Result<Self> {
        use Generator::*;
        let ok = match self {
            P(m) => m < 4,
            J(m, n) => m < n && n < 4,
            Q(a, i) | Qbar(a, i) => (1..=2).contains(&a) && (1..=n_susy).contains(&i),
            Z(i, j) | Zstar(i, j) => i >= 1 && i < j && j <= n_susy,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::IndexOutOfRange(format!("{self} with N = {n_susy}")))
        }
    }

    /// Every generator for `n_susy` supersymmetries, in sort order.
    pub fn all(n_susy: u8) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=n_susy {
            for j in i + 1..=n_susy {
                out.push(Generator::Zstar(i, j));
                out.push(Generator::Z(i, j));
            }
        }
        out.extend((0..4).map(Generator::P));
        for m in 0..4 {
            for n in m + 1..4 {
                out.push(Generator::J(m, n));
            }
        }
        for a in 1..=2 {
            for i in 1..=n_susy {
                out.push(Generator::Q(a, i));
            }
        }
        for a in 1..=2 {
            for i in 1..=n_susy {
                out.push(Generator::Qbar(a, i));
            }
        }
        out.extend([Generator::Kinv, Generator::K, Generator::F, Generator::E, Generator::Grading]);
        out.sort();
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match *self {
            Zstar(i, j) => write!(f, "Zs[{i},{j}]"),
            Z(i, j) => write!(f, "Z[{i},{j}]"),
            P(m) => write!(f, "P{m}"),
            J(m, n) => write!(f, "J{m}{n}"),
            Q(a, i) => write!(f, "Q[{a},{i}]"),
            Qbar(a, i) => write!(f, "Qb[{a},{i}]"),
            Kinv => write!(f, "Kinv"),
            K => write!(f, "K"),
            F => write!(f, "F"),
            E => write!(f, "E"),
            Grading => write!(f, "Jg"),
        }
    }
}

/// A finite product of generators; the empty word is the unit.
pub type Word = Vec<Generator>;

pub fn word_parity(w: &[Generator]) -> i8 {
    w.iter().fold(1, |acc, g| acc * g.parity())
}

pub fn word_to_string(w: &[Generator]) -> String {
    if w.is_empty() {
        return "Id".into();
    }
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_order_matches_sectors() {
        let all = Generator::all(2);
        let pos = |g: Generator| all.iter().position(|&x| x == g).unwrap();
        assert!(pos(Generator::Zstar(1, 2)) < pos(Generator::Z(1, 2)));
        assert!(pos(Generator::Z(1, 2)) < pos(Generator::P(0)));
        assert!(pos(Generator::J(2, 3)) < pos(Generator::Q(1, 1)));
        assert!(pos(Generator::Qbar(2, 2)) < pos(Generator::Kinv));
        assert!(pos(Generator::Kinv) < pos(Generator::K));
        assert!(pos(Generator::F) < pos(Generator::E));
        assert_eq!(*all.last().unwrap(), Generator::Grading);
        assert_eq!(all.len(), 2 + 4 + 6 + 8 + 5);
    }

    #[test]
    fn parities() {
        assert_eq!(word_parity(&[Generator::Q(1, 1), Generator::Qbar(1, 1)]), 1);
        assert_eq!(word_parity(&[Generator::Q(1, 1), Generator::P(0)]), -1);
        assert_eq!(word_parity(&[]), 1);
    }

    #[test]
    fn index_validation() {
        assert!(Generator::Q(3, 1).validate(2).is_err());
        assert!(Generator::Z(2, 1).validate(2).is_err());
        assert!(Generator::Q(1, 2).validate(1).is_err());
        assert!(Generator::J(0, 3).validate(1).is_ok());
    }
}
