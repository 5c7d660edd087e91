use super::gauss::Gq;
use std::fmt;

/// Dense univariate polynomial in `s` over Gaussian rationals, coefficients low to high.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    c: Vec<Gq>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Gq::one())
    }

    pub fn constant(a: Gq) -> Self {
        Poly::from_coeffs(vec![a])
    }

    pub fn from_coeffs(c: Vec<Gq>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    /// `s^k`
    pub fn monomial(k: usize, a: Gq) -> Self {
        let mut c = vec![Gq::zero(); k + 1];
        c[k] = a;
        Poly::from_coeffs(c)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Gq::is_zero) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[Gq] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Gq> {
        self.c.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.c.iter().position(|a| !a.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.c[k.min(self.c.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Gq::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            match (self.c.get(k), o.c.get(k)) {
                (Some(a), Some(b)) => c.push(a + b),
                (Some(a), None) => c.push(a.clone()),
                (None, Some(b)) => c.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Gq::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, a: &Gq) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * a).collect() }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.lead().unwrap().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Gq::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] * &lead_inv;
            for (j, b) in d.c.iter().enumerate() {
                let t = &f * b;
                r[k - dd + j] = &r[k - dd + j] - &t;
            }
            q[k - dd] = f;
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn exact_div(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_constant() && !a.is_zero() || b.is_constant() && !b.is_zero() {
            return Poly::one();
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    pub fn eval(&self, x: &Gq) -> Gq {
        let mut acc = Gq::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// True when only even powers of `s` occur.
    pub fn is_even(&self) -> bool {
        self.c.iter().skip(1).step_by(2).all(Gq::is_zero)
    }

    /// For an even polynomial, the polynomial in `q = s²`.
    pub fn halve(&self) -> Poly {
        Poly::from_coeffs(self.c.iter().step_by(2).cloned().collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(&Gq) -> Gq) -> Poly {
        Poly::from_coeffs(self.c.iter().map(f).collect())
    }

    /// Multiplicity of the root `x`.
    pub fn root_multiplicity(&self, x: &Gq) -> usize {
        let lin = Poly::from_coeffs(vec![-x, Gq::one()]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(x).is_zero() {
            p = p.divrem(&lin).0;
            k += 1;
        }
        k
    }

    /// Renders with a variable name and an exponent step/offset (Laurent display).
    pub fn render(&self, var: &str, step: i32, offset: i32) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let e = offset + step * k as i32;
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let coef = a.to_string();
            let term = if mono.is_empty() {
                coef
            } else if a.is_one() {
                mono
            } else if (-a).is_one() {
                format!("-{mono}")
            } else {
                format!("{coef}*{mono}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("s", 1, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&x| Gq::from_i64(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[-1, 0, 0, 1]);
        let d = p(&[-1, 1]);
        let (q, r) = a.divrem(&d);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(Poly::gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn multiplicity() {
        let a = p(&[1, -2, 1]);
        assert_eq!(a.root_multiplicity(&Gq::one()), 2);
        assert_eq!(a.root_multiplicity(&Gq::from_i64(2)), 0);
    }

    #[test]
    fn render_laurent() {
        assert_eq!(p(&[1, 0, 1]).render("q", 1, -1), "q + q^-1");
        assert_eq!(p(&[-1, 0, 1]).render("s", 1, 0), "s^2 - 1");
    }
}
