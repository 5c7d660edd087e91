use crate::error::{Error, Result};
use crate::scalar::{Gq, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense matrix over [`Scalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::diagonal((0..n).map(|_| Scalar::one()).collect())
    }

    pub fn diagonal(d: Vec<Scalar>) -> Self {
        let n = d.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Swap `V₁⊗V₂ → V₂⊗V₁` as a `(d₂d₁) × (d₁d₂)` matrix.
    pub fn flip(d1: usize, d2: usize) -> Self {
        let mut m = Matrix::zeros(d1 * d2, d1 * d2);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, Scalar::one());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn same_shape(&self, o: &Matrix, op: &str) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix> {
        self.same_shape(o, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    m.data[idx] = &m.data[idx] + &(a * b);
                }
            }
        }
        Ok(m)
    }

    pub fn mul_all(factors: &[&Matrix]) -> Result<Matrix> {
        let mut it = factors.iter();
        let first = (*it.next().expect("empty product")).clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn pow(&self, n: u32) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product; index `(i, j) ↦ i·d₂ + j`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            m.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Entrywise value at `s = 1`.
    pub fn classical_limit(&self) -> Result<Matrix> {
        self.try_map(|x| Ok(Scalar::constant(x.classical_limit()?)))
    }

    /// If `self = c·o` for a scalar `c`, returns `c`.
    pub fn proportionality(&self, o: &Matrix) -> Option<Scalar> {
        if self.rows != o.rows || self.cols != o.cols {
            return None;
        }
        let k = o.data.iter().position(|x| !x.is_zero())?;
        let c = self.data[k].checked_div(&o.data[k]).ok()?;
        if *self == o.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Unique solution of `self · x = b`, or `None` if inconsistent or underdetermined.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None;
        }
        Some((0..self.cols).map(|r| m.get(r, self.cols).clone()).collect())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Numeric entries as Gaussian rationals (constant matrices only).
    pub fn constant_entries(&self) -> Option<Vec<Vec<Gq>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::as_constant).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[&[i64]]) -> Matrix {
        Matrix::from_rows(v.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect()).collect())
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::q(), Scalar::one()],
            vec![Scalar::zero(), Scalar::q_pow(-1)],
        ]);
        assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        let v = Matrix::from_rows(ns[0].iter().map(|x| vec![x.clone()]).collect());
        assert!(a.mul(&v).unwrap().is_zero());
        let sq = m(&[&[2, 0], &[1, 1]]);
        assert_eq!(sq.solve(&[Scalar::from_i64(4), Scalar::from_i64(3)]).unwrap(), vec![Scalar::from_i64(2), Scalar::from_i64(1)]);
    }

    #[test]
    fn flip_squares_to_identity() {
        let p = Matrix::flip(2, 3);
        let q = Matrix::flip(3, 2);
        assert!(q.mul(&p).unwrap().is_identity());
    }

    #[test]
    fn kron_mixed_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let lhs = a.kron(&b).mul(&b.kron(&a)).unwrap();
        let rhs = a.mul(&b).unwrap().kron(&b.mul(&a).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_matches() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant(), Scalar::from_i64(-2));
    }
}
