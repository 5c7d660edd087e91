use crate::scalar::Gq;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b·√2` with Gaussian-rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coeff {
    pub rational: Gq,
    pub sqrt2: Gq,
}

impl Coeff {
    pub fn new(rational: Gq, sqrt2: Gq) -> Self {
        Coeff { rational, sqrt2 }
    }

    pub fn zero() -> Self {
        Coeff::new(Gq::zero(), Gq::zero())
    }

    pub fn one() -> Self {
        Coeff::from(Gq::one())
    }

    pub fn i() -> Self {
        Coeff::from(Gq::i())
    }

    pub fn sqrt2() -> Self {
        Coeff::new(Gq::zero(), Gq::one())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Coeff::from(Gq::from_ratio(n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt2.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coeff::new(self.rational.conj(), self.sqrt2.conj())
    }

    /// Exact quotient, when it exists in `Q(i)[√2]`.
    pub fn checked_div(&self, o: &Coeff) -> Option<Coeff> {
        // (a + b√2)/(c + d√2) = (a + b√2)(c − d√2)/(c² − 2d²)
        let norm = &(&o.rational * &o.rational) - &(&Gq::from_i64(2) * &(&o.sqrt2 * &o.sqrt2));
        let inv = norm.inv()?;
        let num = self * &Coeff::new(o.rational.clone(), -&o.sqrt2);
        Some(Coeff::new(&num.rational * &inv, &num.sqrt2 * &inv))
    }

    /// The value as a Gaussian rational, if it has no `√2` part.
    pub fn as_gq(&self) -> Option<&Gq> {
        self.sqrt2.is_zero().then_some(&self.rational)
    }
}

impl From<Gq> for Coeff {
    fn from(g: Gq) -> Self {
        Coeff::new(g, Gq::zero())
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from(Gq::from_i64(n))
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff::new(&self.rational + &o.rational, &self.sqrt2 + &o.sqrt2)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff::new(&self.rational - &o.rational, &self.sqrt2 - &o.sqrt2)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        let two = Gq::from_i64(2);
        Coeff::new(
            &(&self.rational * &o.rational) + &(&two * &(&self.sqrt2 * &o.sqrt2)),
            &(&self.rational * &o.sqrt2) + &(&self.sqrt2 * &o.rational),
        )
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::new(-&self.rational, -&self.sqrt2)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt2", self.sqrt2),
            (false, false) => write!(f, "({} + {}*sqrt2)", self.rational, self.sqrt2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&Coeff::sqrt2() * &Coeff::sqrt2(), Coeff::from(2));
    }

    #[test]
    fn division_round_trip() {
        let a = &Coeff::from(3) + &Coeff::sqrt2();
        let b = &Coeff::i() + &(&Coeff::from(2) * &Coeff::sqrt2());
        let q = a.checked_div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert!(a.checked_div(&Coeff::zero()).is_none());
    }
}
