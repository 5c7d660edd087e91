use super::gauss::Gq;
use super::poly::Poly;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact element of Q(i)(s), stored as `s^exp · num / den`.
///
/// Canonical form: `num` and `den` have nonzero constant terms, are coprime,
/// and `den` is monic. Zero is `exp = 0, num = 0, den = 1`. Two scalars are
/// equal iff their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    exp: i32,
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { exp: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::constant(Gq::one())
    }

    pub fn constant(a: Gq) -> Self {
        if a.is_zero() {
            return Scalar::zero();
        }
        Scalar { exp: 0, num: Poly::constant(a), den: Poly::one() }
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::constant(Gq::from_i64(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::constant(Gq::from_ratio(n, d))
    }

    pub fn i() -> Self {
        Scalar::constant(Gq::i())
    }

    /// `s^k`
    pub fn s_pow(k: i32) -> Self {
        Scalar { exp: k, num: Poly::one(), den: Poly::one() }
    }

    pub fn s() -> Self {
        Scalar::s_pow(1)
    }

    /// `q = s²`
    pub fn q() -> Self {
        Scalar::s_pow(2)
    }

    pub fn q_pow(k: i32) -> Self {
        Scalar::s_pow(2 * k)
    }

    /// Builds `s^exp · num / den` and brings it to canonical form.
    pub fn from_parts(exp: i32, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let exp = exp + vn as i32 - vd as i32;
        let num = num.shift_down(vn);
        let den = den.shift_down(vd);
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.lead().unwrap().clone();
        if lc.is_one() {
            Ok(Scalar { exp, num, den })
        } else {
            let inv = lc.inv().unwrap();
            Ok(Scalar { exp, num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    /// Laurent polynomial `Σ c_k s^{lo + k}`.
    pub fn laurent(lo: i32, coeffs: Vec<Gq>) -> Self {
        Scalar::from_parts(lo, Poly::from_coeffs(coeffs), Poly::one()).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `s`.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.exp == 0 && self.num.is_constant() && self.den.is_one())
    }

    pub fn as_constant(&self) -> Option<Gq> {
        if self.is_zero() {
            Some(Gq::zero())
        } else if self.is_constant() {
            Some(self.num.coeffs()[0].clone())
        } else {
            None
        }
    }

    pub fn exp(&self) -> i32 {
        self.exp
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::from_parts(-self.exp, self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, a: &Gq) -> Scalar {
        if a.is_zero() {
            return Scalar::zero();
        }
        Scalar { exp: self.exp, num: self.num.scale(a), den: self.den.clone() }
    }

    /// Complex conjugation of the coefficients (s is treated as real).
    pub fn conj(&self) -> Scalar {
        Scalar {
            exp: self.exp,
            num: self.num.map_coeffs(Gq::conj),
            den: self.den.map_coeffs(Gq::conj),
        }
    }

    /// Substitutes `s ↦ 1/s` (equivalently q ↦ q⁻¹).
    pub fn invert_variable(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        let rev = |p: &Poly| {
            let mut c = p.coeffs().to_vec();
            c.reverse();
            Poly::from_coeffs(c)
        };
        let dn = self.num.degree().unwrap() as i32;
        let dd = self.den.degree().unwrap() as i32;
        Scalar::from_parts(-self.exp - dn + dd, rev(&self.num), rev(&self.den)).unwrap()
    }

    /// Value at `s = s0`.
    pub fn eval_s(&self, s0: &Gq) -> Result<Gq> {
        if self.is_zero() {
            return Ok(Gq::zero());
        }
        if s0.is_zero() && self.exp < 0 {
            return Err(Error::Pole {
                point: "s = 0".into(),
                factor: format!("s^{}", -self.exp),
            });
        }
        let d = self.den.eval(s0);
        if d.is_zero() {
            let k = self.den.root_multiplicity(s0);
            let lin = Poly::from_coeffs(vec![-s0, Gq::one()]);
            let factor = if k == 1 { format!("({lin})") } else { format!("({lin})^{k}") };
            return Err(Error::Pole { point: format!("s = {s0}"), factor });
        }
        let sp = s0.pow(self.exp).unwrap_or_else(Gq::zero);
        Ok(&(&sp * &self.num.eval(s0)) / &d)
    }

    /// Value at `q = q0`. Works directly in q when only even powers of s occur;
    /// otherwise needs a rational square root of `q0`.
    pub fn eval_q(&self, q0: &Gq) -> Result<Gq> {
        if self.is_zero() {
            return Ok(Gq::zero());
        }
        if self.exp % 2 == 0 && self.num.is_even() && self.den.is_even() {
            let n = self.num.halve();
            let d = self.den.halve();
            if q0.is_zero() && self.exp < 0 {
                return Err(Error::Pole {
                    point: "q = 0".into(),
                    factor: format!("q^{}", -self.exp / 2),
                });
            }
            let dv = d.eval(q0);
            if dv.is_zero() {
                let k = d.root_multiplicity(q0);
                let lin = Poly::from_coeffs(vec![-q0, Gq::one()]).render("q", 1, 0);
                let factor = if k == 1 { format!("({lin})") } else { format!("({lin})^{k}") };
                return Err(Error::Pole { point: format!("q = {q0}"), factor });
            }
            let qp = q0.pow(self.exp / 2).unwrap_or_else(Gq::zero);
            return Ok(&(&qp * &n.eval(q0)) / &dv);
        }
        let s0 = q0.rational_sqrt().ok_or_else(|| Error::NotASquare(q0.to_string()))?;
        self.eval_s(&s0)
    }

    /// Value at `s = 1`. Common factors were cancelled at construction, so a
    /// remaining zero of the denominator is a genuine pole.
    pub fn classical_limit(&self) -> Result<Gq> {
        self.eval_s(&Gq::one())
    }

    /// Substitutes a numeric `q` and returns the constant scalar.
    pub fn specialize_q(&self, q0: &Gq) -> Result<Scalar> {
        Ok(Scalar::constant(self.eval_q(q0)?))
    }

    fn is_q_function(&self) -> bool {
        self.exp % 2 == 0 && self.num.is_even() && self.den.is_even()
    }

    /// Balanced quantum integer `[n]_x = (x^n − x^{−n})/(x − x^{−1})`.
    pub fn q_int(n: i64, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        let m = n.unsigned_abs() as i32;
        for k in 0..m {
            acc = &acc + &x.pow(m - 1 - 2 * k).unwrap();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    pub fn q_factorial(n: u32, x: &Scalar) -> Scalar {
        (1..=n as i64).fold(Scalar::one(), |acc, k| &acc * &Scalar::q_int(k, x))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (var, step, num, den, e) = if self.is_q_function() {
            ("q", 1, self.num.halve(), self.den.halve(), self.exp / 2)
        } else {
            ("s", 1, self.num.clone(), self.den.clone(), self.exp)
        };
        let n = num.render(var, step, e);
        if den.is_one() {
            write!(f, "{n}")
        } else {
            let d = den.render(var, step, 0);
            let wrap = |t: String, single: bool| if single { t } else { format!("({t})") };
            let n_single = num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            let d_single = den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            write!(f, "{}/{}", wrap(n, n_single), wrap(d, d_single))
        }
    }
}

/// Serialized form: `s^s_exp · num(s) / den(s)`, each coefficient `[re, im]` as exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRepr {
    pub s_exp: i32,
    pub num: Vec<[String; 2]>,
    pub den: Vec<[String; 2]>,
}

fn coeffs_repr(p: &Poly) -> Vec<[String; 2]> {
    p.coeffs().iter().map(|c| [c.re.to_string(), c.im.to_string()]).collect()
}

fn coeffs_parse(v: &[[String; 2]]) -> Option<Poly> {
    let mut out = Vec::with_capacity(v.len());
    for [re, im] in v {
        out.push(Gq::new(re.parse().ok()?, im.parse().ok()?));
    }
    Some(Poly::from_coeffs(out))
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        ScalarRepr { s_exp: s.exp, num: coeffs_repr(&s.num), den: coeffs_repr(&s.den) }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(de)?;
        let num = coeffs_parse(&r.num).ok_or_else(|| serde::de::Error::custom("bad coefficient"))?;
        let den = coeffs_parse(&r.den).ok_or_else(|| serde::de::Error::custom("bad coefficient"))?;
        Scalar::from_parts(r.s_exp, num, den).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.exp.min(o.exp);
        let a = self.num.shift_up((self.exp - m) as usize);
        let b = o.num.shift_up((o.exp - m) as usize);
        if self.den == o.den {
            if self.den.is_one() {
                let n = a.add(&b);
                if n.is_zero() {
                    return Scalar::zero();
                }
                let v = n.valuation();
                return Scalar { exp: m + v as i32, num: n.shift_down(v), den: Poly::one() };
            }
            return Scalar::from_parts(m, a.add(&b), self.den.clone()).unwrap();
        }
        let num = a.mul(&o.den).add(&b.mul(&self.den));
        Scalar::from_parts(m, num, self.den.mul(&o.den)).unwrap()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { exp: self.exp + o.exp, num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let num = self.num.exact_div(&g1).mul(&o.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&o.den.exact_div(&g1));
        Scalar { exp: self.exp + o.exp, num, den }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { exp: self.exp, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<Gq> for Scalar {
    fn from(a: Gq) -> Self {
        Scalar::constant(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }
    fn qi() -> Scalar {
        Scalar::q_pow(-1)
    }

    #[test]
    fn q_times_inverse_is_one() {
        assert!((&Scalar::s_pow(2) * &Scalar::s_pow(-2)).is_one());
    }

    #[test]
    fn self_division_is_one() {
        let x = &q() - &qi();
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn long_division_example() {
        let a = &(&q() * &q()) - &Scalar::one();
        let b = &q() - &qi();
        assert_eq!(a.checked_div(&b).unwrap(), q());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let x = &q() + &qi();
        assert_eq!(x.eval_q(&Gq::one()).unwrap(), Gq::from_i64(2));
        let num = &q().pow(2).unwrap() - &q().pow(-2).unwrap();
        let r = num.checked_div(&(&q() - &qi())).unwrap();
        assert_eq!(r.classical_limit().unwrap(), Gq::from_i64(2));
    }

    #[test]
    fn genuine_pole_names_factor() {
        let x = Scalar::one().checked_div(&(&q() - &Scalar::one())).unwrap();
        match x.classical_limit() {
            Err(Error::Pole { factor, .. }) => assert_eq!(factor, "(s - 1)"),
            other => panic!("expected pole, got {other:?}"),
        }
        match x.eval_q(&Gq::one()) {
            Err(Error::Pole { factor, .. }) => assert_eq!(factor, "(q - 1)"),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn odd_powers_need_square_root() {
        assert_eq!(Scalar::s().eval_q(&Gq::from_i64(4)).unwrap(), Gq::from_i64(2));
        assert!(matches!(Scalar::s().eval_q(&Gq::from_i64(2)), Err(Error::NotASquare(_))));
    }

    #[test]
    fn quantum_integers() {
        let two = Scalar::q_int(2, &q());
        assert_eq!(two, &q() + &qi());
        assert_eq!(Scalar::q_int(3, &q()).classical_limit().unwrap(), Gq::from_i64(3));
        assert_eq!(Scalar::q_factorial(3, &q()).classical_limit().unwrap(), Gq::from_i64(6));
    }

    #[test]
    fn display_in_q_when_even() {
        assert_eq!((&q() + &qi()).to_string(), "q + q^-1");
        assert_eq!(Scalar::s().to_string(), "s");
        let r = Scalar::one().checked_div(&(&q() - &Scalar::one())).unwrap();
        assert_eq!(r.to_string(), "1/(q - 1)");
    }

    #[test]
    fn serde_round_trip() {
        let x = (&q() + &Scalar::i()).checked_div(&(&q() - &Scalar::from_i64(3))).unwrap();
        let v = serde_json_like(&x);
        assert_eq!(v.s_exp, 0);
        let back: Scalar = {
            let num = coeffs_parse(&v.num).unwrap();
            let den = coeffs_parse(&v.den).unwrap();
            Scalar::from_parts(v.s_exp, num, den).unwrap()
        };
        assert_eq!(back, x);
    }

    fn serde_json_like(x: &Scalar) -> ScalarRepr {
        ScalarRepr::from(x)
    }

    #[test]
    fn invert_variable_maps_q_to_inverse() {
        let x = (&q() + &Scalar::from_i64(2)).checked_div(&(&q() - &Scalar::one())).unwrap();
        let y = (&qi() + &Scalar::from_i64(2)).checked_div(&(&qi() - &Scalar::one())).unwrap();
        assert_eq!(x.invert_variable(), y);
    }
}
