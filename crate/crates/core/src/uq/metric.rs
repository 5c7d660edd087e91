use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Gq, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;

/// `g_ab = Tr(u·e_a·e_b)` and its inverse.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumMetric {
    pub g: Matrix,
    /// `None` when `g` is degenerate.
    pub inverse: Option<Matrix>,
    pub determinant: Scalar,
}

impl QuantumMetric {
    pub fn new(u: &Matrix, basis: &[Matrix]) -> Result<QuantumMetric> {
        let n = basis.len();
        let mut g = Matrix::zeros(n, n);
        for a in 0..n {
            let ua = u.mul(&basis[a])?;
            for b in 0..n {
                g.set(a, b, ua.mul(&basis[b])?.trace());
            }
        }
        let determinant = g.determinant();
        let inverse = g.inverse().ok();
        Ok(QuantumMetric { g, inverse, determinant })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    /// `g^{ab} g_{bc} = δ^a_c`
    pub fn inverse_identity_holds(&self) -> Result<bool> {
        match &self.inverse {
            Some(inv) => Ok(inv.mul(&self.g)?.is_identity() && self.g.mul(inv)?.is_identity()),
            None => Ok(false),
        }
    }

    /// Invariance `g_ab λ^{ab}_{cd} = g_cd`. Returns the difference when it fails.
    pub fn check_invariance(&self, lambda: &Matrix) -> Result<Option<Matrix>> {
        let n = self.dim();
        if lambda.rows() != n * n || lambda.cols() != n * n {
            return Err(Error::DimensionMismatch(format!("metric of size {n} against a {}x{} factor", lambda.rows(), lambda.cols())));
        }
        let gv = Matrix::from_fn(1, n * n, |_, k| self.g.get(k / n, k % n).clone());
        let diff = gv.mul(lambda)?.sub(&gv)?;
        Ok(if diff.is_zero() { None } else { Some(diff) })
    }

    /// `Φᵃ Ψ_a = Ψᵃ Φ_a` on formal two-field words: the word `Φᵃ Ψᵇ` is
    /// exchanged as `λ^{ab}_{cd} Ψᶜ Φᵈ` and both sides are contracted with `g`.
    pub fn scalar_product_symmetric(&self, lambda: &Matrix) -> Result<bool> {
        type FieldWord = (char, usize, char, usize);
        let n = self.dim();
        let mut lhs: BTreeMap<FieldWord, Scalar> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                let gab = self.g.get(a, b);
                if gab.is_zero() {
                    continue;
                }
                for c in 0..n {
                    for d in 0..n {
                        let l = lambda.get(a * n + b, c * n + d);
                        if !l.is_zero() {
                            *lhs.entry(('Ψ', c, 'Φ', d)).or_default() += &(gab * l);
                        }
                    }
                }
            }
        }
        lhs.retain(|_, v| !v.is_zero());
        let mut rhs: BTreeMap<FieldWord, Scalar> = BTreeMap::new();
        for c in 0..n {
            for d in 0..n {
                let g = self.g.get(c, d);
                if !g.is_zero() {
                    rhs.insert(('Ψ', c, 'Φ', d), g.clone());
                }
            }
        }
        Ok(lhs == rhs)
    }

    /// At `s = 1`, `M·g·Mᵀ ∝ 1` for the Cartesian basis
    /// `X₁ = T⁺ − T⁻`, `X₂ = i(T⁺ + T⁻)`, `X₃ = 2T⁰`.
    pub fn classical_orthonormal(&self) -> Result<Option<Gq>> {
        if self.dim() != 3 {
            return Err(Error::DimensionMismatch("classical check needs the weight basis of sl2".into()));
        }
        let i = Scalar::i();
        let m = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::from_i64(-1)],
            vec![i.clone(), Scalar::zero(), i],
            vec![Scalar::zero(), Scalar::from_i64(2), Scalar::zero()],
        ]);
        let g1 = self.g.classical_limit()?;
        let ortho = Matrix::mul_all(&[&m, &g1, &m.transpose()])?;
        Ok(ortho
            .proportionality(&Matrix::identity(3))
            .filter(|c| !c.is_zero())
            .and_then(|c| c.as_constant()))
    }
}

/// Rescaling-invariant ratios of the adjoint metric in the weight basis `(+, 0, −)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CasimirComparison {
    /// `g₊₋ / g₋₊`
    pub ratio_pm: Option<Scalar>,
    /// `g₊₋·g₋₊ / g₀₀²`
    pub ratio_square: Option<Scalar>,
    /// `+1` when `ratio_pm = q²`, `−1` when it is `q⁻²`.
    pub orientation: Option<i8>,
    pub others_zero: bool,
    pub passed: bool,
}

/// Checks `g₊₋/g₋₊ = q^{±2}`, `g₊₋g₋₊/g₀₀² = (q + q⁻¹)²` and that every other entry vanishes.
pub fn casimir_form_compare(metric: &QuantumMetric, q: &Scalar) -> Result<CasimirComparison> {
    let g = &metric.g;
    if g.rows() != 3 || g.cols() != 3 {
        return Err(Error::DimensionMismatch("the quadratic form compares 3x3 metrics".into()));
    }
    let (pm, mp, zz) = (g.get(0, 2), g.get(2, 0), g.get(1, 1));
    let others_zero = [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)].iter().all(|&(a, b)| g.get(a, b).is_zero());
    let ratio_pm = pm.checked_div(mp).ok();
    let ratio_square = (pm * mp).checked_div(&(zz * zz)).ok();
    let orientation = ratio_pm.as_ref().and_then(|r| {
        if *r == q.pow(2).ok()? {
            Some(1)
        } else if *r == q.pow(-2).ok()? {
            Some(-1)
        } else {
            None
        }
    });
    let target = {
        let t = q + &q.inv()?;
        &t * &t
    };
    let passed = others_zero && orientation.is_some() && ratio_square.as_ref() == Some(&target);
    Ok(CasimirComparison { ratio_pm, ratio_square, orientation, others_zero, passed })
}
