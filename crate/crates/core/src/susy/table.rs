use super::basis::{BasisSymbol, LinComb};
use super::spinor::{b_matrix, bbar_matrix, eps_up, eta, sigma_low, sigma_up, M2};
use crate::error::{Error, Result};
use crate::scalar::{Gq, Scalar};

/// Structure constants of the general supersymmetry algebra.
#[derive(Clone, Debug)]
pub struct BracketTable {
    n_susy: u8,
    c: Gq,
    gamma: Vec<M2>,
    internal_rep: Vec<Vec<Vec<Scalar>>>,
    quantum_f: Option<Vec<Vec<Vec<Scalar>>>>,
}

impl BracketTable {
    /// Default table: `c = 0`, zero internal representation, no quantum sector.
    pub fn new(n_susy: u8) -> Result<Self> {
        if n_susy == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        let n = n_susy as usize;
        Ok(BracketTable {
            n_susy,
            c: Gq::zero(),
            gamma: (0..4).map(sigma_low).collect(),
            internal_rep: vec![vec![vec![Scalar::zero(); n]; n]; 3],
            quantum_f: None,
        })
    }

    pub fn n_susy(&self) -> u8 {
        self.n_susy
    }

    /// Sets the `c` coefficient of `[Q, P]` (zero by default).
    pub fn with_c(mut self, c: Gq) -> Self {
        self.c = c;
        self
    }

    /// `l(s^a)`: `[Q_α^I, T^a] = Σ_J l[a][I][J] Q_α^J` (0-based matrix indices).
    pub fn with_internal_rep(mut self, l: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = self.n_susy as usize;
        if l.len() != 3 || l.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::DimensionMismatch(format!("internal rep must be 3 matrices of size {n}x{n}")));
        }
        self.internal_rep = l;
        Ok(self)
    }

    /// Quantum structure constants `f[a][b][c] = f^{ab}_c`.
    pub fn with_quantum(mut self, f: Vec<Vec<Vec<Scalar>>>) -> Self {
        self.quantum_f = Some(f);
        self
    }

    pub fn has_quantum(&self) -> bool {
        self.quantum_f.is_some()
    }

    pub fn symbols(&self) -> Vec<BasisSymbol> {
        let mut v = BasisSymbol::classical(self.n_susy);
        if self.has_quantum() {
            v.extend((1..=3).map(BasisSymbol::T));
        }
        v
    }

    fn check(&self, x: BasisSymbol) -> Result<()> {
        x.validate(self.n_susy)?;
        if x.is_quantum() && !self.has_quantum() {
            return Err(Error::RealizationUnavailable(format!("{x}: no quantum sector configured")));
        }
        Ok(())
    }

    /// Graded bracket `[x, y]`.
    pub fn bracket(&self, x: BasisSymbol, y: BasisSymbol) -> Result<LinComb> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.raw(x, y))
    }

    fn raw(&self, x: BasisSymbol, y: BasisSymbol) -> LinComb {
        use BasisSymbol::*;
        let k = |v: i64| Scalar::from_i64(v);
        match (x, y) {
            (Z(..) | Zstar(..), _) | (_, Z(..) | Zstar(..)) => LinComb::zero(),
            (P(_), P(_)) => LinComb::zero(),
            (P(m), J(r, n)) => {
                let (m, r, n) = (m as usize, r as usize, n as usize);
                let mut out = LinComb::zero();
                if m == r {
                    out.add(P(n as u8), k(eta(m)));
                }
                if m == n {
                    out.add(P(r as u8), k(-eta(m)));
                }
                out
            }
            (J(m, n), J(r, s)) => {
                let (m, n, r, s) = (m as usize, n as usize, r as usize, s as usize);
                let d = |a: usize, b: usize| if a == b { eta(a) } else { 0 };
                let mut out = LinComb::zero();
                out.add_scaled(&LinComb::j(n, r, k(1)), &k(d(m, s)));
                out.add_scaled(&LinComb::j(m, s, k(1)), &k(d(n, r)));
                out.add_scaled(&LinComb::j(n, s, k(1)), &k(-d(m, r)));
                out.add_scaled(&LinComb::j(m, r, k(1)), &k(-d(n, s)));
                out
            }
            (Q(a, i), Qbar(b, j)) => {
                let mut out = LinComb::zero();
                if i == j {
                    for m in 0..4 {
                        let s = &sigma_up(m)[a as usize - 1][b as usize - 1];
                        out.add(P(m as u8), Scalar::constant(&Gq::from_i64(2) * s));
                    }
                }
                out
            }
            (Q(a, i), Q(b, j)) | (Qbar(a, i), Qbar(b, j)) => {
                let e = eps_up(a as usize - 1, b as usize - 1);
                if e == 0 || i == j {
                    return LinComb::zero();
                }
                let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                let z = if matches!(x, Q(..)) { Z(lo, hi) } else { Zstar(lo, hi) };
                LinComb::single(z, k(e * sign))
            }
            (Q(a, i), J(m, n)) => {
                let b = b_matrix(m as usize, n as usize);
                let mut out = LinComb::zero();
                for c in 0..2 {
                    out.add(Q(c as u8 + 1, i), Scalar::constant(b[a as usize - 1][c].clone()));
                }
                out
            }
            (Qbar(a, i), J(m, n)) => {
                let b = bbar_matrix(m as usize, n as usize);
                let mut out = LinComb::zero();
                for c in 0..2 {
                    out.add(Qbar(c as u8 + 1, i), Scalar::constant(b[a as usize - 1][c].clone()));
                }
                out
            }
            (Q(a, i), P(m)) => {
                let mut out = LinComb::zero();
                if !self.c.is_zero() {
                    for bd in 0..2 {
                        let g = &self.gamma[m as usize][a as usize - 1][bd];
                        out.add(Qbar(bd as u8 + 1, i), Scalar::constant(&self.c * g));
                    }
                }
                out
            }
            (Qbar(ad, i), P(m)) => {
                let mut out = LinComb::zero();
                if !self.c.is_zero() {
                    for b in 0..2 {
                        let g = self.gamma[m as usize][b][ad as usize - 1].conj();
                        out.add(Q(b as u8 + 1, i), Scalar::constant(&self.c.conj() * &g));
                    }
                }
                out
            }
            (P(_) | J(..), T(_)) => LinComb::zero(),
            (Q(a, i), T(t)) => {
                let l = &self.internal_rep[t as usize - 1];
                let mut out = LinComb::zero();
                for j in 0..self.n_susy as usize {
                    out.add(Q(a, j as u8 + 1), l[i as usize - 1][j].clone());
                }
                out
            }
            (Qbar(a, i), T(t)) => {
                let l = &self.internal_rep[t as usize - 1];
                let mut out = LinComb::zero();
                for j in 0..self.n_susy as usize {
                    out.add(Qbar(a, j as u8 + 1), -&l[j][i as usize - 1]);
                }
                out
            }
            (T(a), T(b)) => {
                let f = self.quantum_f.as_ref().expect("quantum sector checked");
                let mut out = LinComb::zero();
                for c in 0..3 {
                    out.add(T(c as u8 + 1), f[a as usize - 1][b as usize - 1][c].clone());
                }
                out
            }
            _ => {
                let sign = if x.parity() < 0 && y.parity() < 0 { -1 } else { 1 };
                self.raw(y, x).scale(&k(-sign))
            }
        }
    }

    /// Bracket extended bilinearly to linear combinations.
    pub fn bracket_lin(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.add_scaled(&self.raw(*x, *y), &(cx * cy));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisSymbol::*;

    fn table() -> BracketTable {
        BracketTable::new(2).unwrap()
    }

    #[test]
    fn q_qbar_gives_two_sigma_p() {
        let r = table().bracket(Q(1, 1), Qbar(1, 1)).unwrap();
        let mut expected = LinComb::zero();
        expected.add(P(0), Scalar::from_i64(2));
        expected.add(P(3), Scalar::from_i64(2));
        assert_eq!(r, expected);
    }

    #[test]
    fn momenta_commute() {
        for m in 0..4 {
            for n in 0..4 {
                assert!(table().bracket(P(m), P(n)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn same_chirality_gives_central_charge() {
        let r = table().bracket(Q(1, 1), Q(2, 2)).unwrap();
        assert_eq!(r, LinComb::single(Z(1, 2), Scalar::one()));
        assert!(table().bracket(Q(1, 1), Q(1, 1)).unwrap().is_zero());
        assert!(table().bracket(Q(1, 1), Q(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn p_j_row() {
        // [P_0, J_{01}] = η_00 P_1
        let r = table().bracket(P(0), J(0, 1)).unwrap();
        assert_eq!(r, LinComb::single(P(1), Scalar::from_i64(-1)));
        // [P_1, J_{01}] = −η_11 P_0
        let r = table().bracket(P(1), J(0, 1)).unwrap();
        assert_eq!(r, LinComb::single(P(0), Scalar::from_i64(-1)));
    }

    #[test]
    fn graded_symmetry_everywhere() {
        let t = table();
        let syms = t.symbols();
        for &x in &syms {
            for &y in &syms {
                let xy = t.bracket(x, y).unwrap();
                let yx = t.bracket(y, x).unwrap();
                let sign = if x.parity() < 0 && y.parity() < 0 { 1 } else { -1 };
                assert_eq!(xy, yx.scale(&Scalar::from_i64(sign)), "{x} {y}");
            }
        }
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(table().bracket(Q(1, 3), P(0)).is_err());
        assert!(table().bracket(T(1), P(0)).is_err());
    }
}
