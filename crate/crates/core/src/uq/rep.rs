use super::matrix::Matrix;
use crate::algebra::{AlgebraConfig, AlgebraElement, Generator};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::Serialize;

/// Finite-dimensional representation of U_q(sl2) on the weight basis
/// `v_j, v_{j−1}, …, v_{−j}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rep {
    two_j: u32,
    half: Scalar,
    q_r: Scalar,
    e: Matrix,
    f: Matrix,
    k: Matrix,
    kinv: Matrix,
}

impl Rep {
    /// Spin-`two_j/2` representation.
    ///
    /// `E v_m = v_{m+1}`, `F v_{m+1} = [j−m]·[j+m+1]·v_m` and `K v_m = q_r^m v_m`,
    /// with quantum integers in `q_r`. The defining relations are verified
    /// before the value is returned.
    pub fn spin(two_j: u32, config: &AlgebraConfig) -> Result<Rep> {
        if two_j == 0 {
            return Err(Error::InvalidParameter("spin must be positive".into()));
        }
        config.validate()?;
        let half = config.half_qr();
        let q_r = config.q_r();
        let d = two_j as usize + 1;
        let mut e = Matrix::zeros(d, d);
        let mut f = Matrix::zeros(d, d);
        for k in 1..d {
            e.set(k - 1, k, Scalar::one());
            let c = &Scalar::q_int(k as i64, &q_r) * &Scalar::q_int(two_j as i64 - k as i64 + 1, &q_r);
            f.set(k, k - 1, c);
        }
        let weights: Vec<i32> = (0..d).map(|k| two_j as i32 - 2 * k as i32).collect();
        let k = Matrix::diagonal(weights.iter().map(|&m| half.pow(m).unwrap()).collect());
        let kinv = Matrix::diagonal(weights.iter().map(|&m| half.pow(-m).unwrap()).collect());
        let rep = Rep { two_j, half, q_r, e, f, k, kinv };
        let bad = rep.relation_failures()?;
        if !bad.is_empty() {
            return Err(Error::InvalidParameter(format!("spin-{two_j}/2 relations fail: {}", bad.join(", "))));
        }
        Ok(rep)
    }

    /// Builds a representation from explicit matrices; relations are checked.
    pub fn from_matrices(two_j: u32, config: &AlgebraConfig, e: Matrix, f: Matrix, k: Matrix) -> Result<Rep> {
        let kinv = k.inverse()?;
        let rep = Rep { two_j, half: config.half_qr(), q_r: config.q_r(), e, f, k, kinv };
        let bad = rep.relation_failures()?;
        if !bad.is_empty() {
            return Err(Error::InvalidParameter(format!("relations fail: {}", bad.join(", "))));
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    /// Twice the weight of each basis vector.
    pub fn two_weights(&self) -> Vec<i32> {
        (0..self.dim()).map(|k| self.two_j as i32 - 2 * k as i32).collect()
    }

    pub fn half(&self) -> &Scalar {
        &self.half
    }

    pub fn q_r(&self) -> &Scalar {
        &self.q_r
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn k(&self) -> &Matrix {
        &self.k
    }

    pub fn kinv(&self) -> &Matrix {
        &self.kinv
    }

    /// Names of the defining relations that do not hold.
    pub fn relation_failures(&self) -> Result<Vec<String>> {
        let q_r = &self.q_r;
        let qinv = q_r.inv()?;
        let mut bad = Vec::new();
        let kek = Matrix::mul_all(&[&self.k, &self.e, &self.kinv])?;
        if kek != self.e.scale(q_r) {
            bad.push("K E K^-1 = q_r E".to_string());
        }
        let kfk = Matrix::mul_all(&[&self.k, &self.f, &self.kinv])?;
        if kfk != self.f.scale(&qinv) {
            bad.push("K F K^-1 = q_r^-1 F".to_string());
        }
        if !self.k.mul(&self.kinv)?.is_identity() {
            bad.push("K K^-1 = 1".to_string());
        }
        let comm = self.e.mul(&self.f)?.sub(&self.f.mul(&self.e)?)?;
        let k2 = self.k.mul(&self.k)?.sub(&self.kinv.mul(&self.kinv)?)?;
        let rhs = k2.scale(&(q_r - &qinv).inv()?);
        if comm != rhs {
            bad.push("[E,F] = (K^2 - K^-2)/(q_r - q_r^-1)".to_string());
        }
        Ok(bad)
    }

    pub fn generator(&self, g: Generator) -> Result<&Matrix> {
        match g {
            Generator::E => Ok(&self.e),
            Generator::F => Ok(&self.f),
            Generator::K => Ok(&self.k),
            Generator::Kinv => Ok(&self.kinv),
            other => Err(Error::RealizationUnavailable(format!("{other} in a U_q(sl2) representation"))),
        }
    }

    /// Image of an element built from `E, F, K, K⁻¹`.
    pub fn eval(&self, a: &AlgebraElement) -> Result<Matrix> {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in a.terms() {
            let mut m = Matrix::identity(self.dim());
            for &g in w {
                m = m.mul(self.generator(g)?)?;
            }
            acc = acc.add(&m.scale(c))?;
        }
        Ok(acc)
    }
}
