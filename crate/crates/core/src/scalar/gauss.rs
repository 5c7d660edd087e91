use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gq {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gq {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gq { re, im }
    }

    pub fn zero() -> Self {
        Gq::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Gq::from_i64(1)
    }

    pub fn i() -> Self {
        Gq::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Gq::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Gq::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Gq::new(r, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gq::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Gq::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Gq::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Rational square root of a non-negative real value, if one exists.
    pub fn rational_sqrt(&self) -> Option<Self> {
        if !self.is_real() || self.re.is_negative() {
            return None;
        }
        let n = self.re.numer().sqrt();
        let d = self.re.denom().sqrt();
        if &n * &n == *self.re.numer() && &d * &d == *self.re.denom() {
            Some(Gq::from_rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Parses a real rational literal `p` or `p/r`.
    pub fn parse_rational(text: &str) -> Option<Self> {
        let t = text.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Gq::from_rational(BigRational::new(n, d)))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", fmt_rat(&self.im))
                }
            }
            (false, false) => {
                let im = if self.im.is_one() {
                    "+i".to_string()
                } else if (-&self.im).is_one() {
                    "-i".to_string()
                } else if self.im.is_positive() {
                    format!("+{}i", fmt_rat(&self.im))
                } else {
                    format!("{}i", fmt_rat(&self.im))
                };
                write!(f, "({}{})", fmt_rat(&self.re), im)
            }
        }
    }
}

impl<'a> Add<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn add(self, o: &Gq) -> Gq {
        Gq::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn sub(self, o: &Gq) -> Gq {
        Gq::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn mul(self, o: &Gq) -> Gq {
        if self.im.is_zero() && o.im.is_zero() {
            return Gq::new(&self.re * &o.re, BigRational::zero());
        }
        Gq::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn div(self, o: &Gq) -> Gq {
        self * &o.inv().expect("division of Gaussian rational by zero")
    }
}

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq::new(-self.re, -self.im)
    }
}

impl Neg for &Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Gq> for Gq {
    fn add_assign(&mut self, o: &Gq) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Add for Gq {
    type Output = Gq;
    fn add(self, o: Gq) -> Gq {
        &self + &o
    }
}

impl Sub for Gq {
    type Output = Gq;
    fn sub(self, o: Gq) -> Gq {
        &self - &o
    }
}

impl Mul for Gq {
    type Output = Gq;
    fn mul(self, o: Gq) -> Gq {
        &self * &o
    }
}

/// Serialized as `[re, im]` exact rational strings.
impl serde::Serialize for Gq {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        [self.re.to_string(), self.im.to_string()].serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for Gq {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let [re, im] = <[String; 2]>::deserialize(de)?;
        let p = |t: &str| t.parse::<BigRational>().map_err(serde::de::Error::custom);
        Ok(Gq::new(p(&re)?, p(&im)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Gq::i() * &Gq::i(), Gq::from_i64(-1));
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = Gq::new(BigRational::from_integer(1.into()), BigRational::from_integer(2.into()));
        assert_eq!(&z * &z.inv().unwrap(), Gq::one());
        assert!(Gq::zero().inv().is_none());
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(Gq::from_ratio(9, 4).rational_sqrt(), Some(Gq::from_ratio(3, 2)));
        assert_eq!(Gq::from_i64(2).rational_sqrt(), None);
        assert_eq!(Gq::from_i64(-4).rational_sqrt(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gq::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Gq::i().to_string(), "i");
        assert_eq!((&Gq::one() + &Gq::i()).to_string(), "(1+i)");
    }
}
