use super::matrix::Matrix;
use super::rep::Rep;
use crate::algebra::{AlgebraElement, Generator};
use crate::error::{Error, Result};
use crate::hopf::{StructureMaps, TensorElement};
use crate::scalar::Scalar;
use serde::Serialize;

/// R-matrix of `ρ₁ ⊗ ρ₂`, acting on `V₁ ⊗ V₂`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RMatrix {
    pub matrix: Matrix,
    pub dims: (usize, usize),
}

/// `c_n = q_r^{n(n−1)/2}·(q_r − q_r⁻¹)ⁿ / [n]!`
pub(crate) fn series_coefficient(rep: &Rep, n: u32) -> Result<Scalar> {
    let q_r = rep.q_r();
    let diff = q_r - &q_r.inv()?;
    let num = &rep.half().pow((n * n.saturating_sub(1)) as i32)? * &diff.pow(n as i32)?;
    num.checked_div(&Scalar::q_factorial(n, q_r))
}

/// Image of a tensor under `ρ₁ ⊗ … ⊗ ρₙ`.
pub fn eval_tensor(t: &TensorElement, reps: &[&Rep]) -> Result<Matrix> {
    if t.legs() != reps.len() {
        return Err(Error::DimensionMismatch(format!("{} legs, {} representations", t.legs(), reps.len())));
    }
    let dim: usize = reps.iter().map(|r| r.dim()).product();
    let mut acc = Matrix::zeros(dim, dim);
    for (ws, c) in t.terms() {
        let mut m = Matrix::identity(1);
        for (w, r) in ws.iter().zip(reps) {
            m = m.kron(&r.eval(&AlgebraElement::from_word(w.clone()))?);
        }
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

/// `R = q_r^{H⊗H/2} · Σₙ cₙ (K⁻¹F)ⁿ ⊗ (EK)ⁿ`, a finite sum in any finite-dimensional representation.
pub fn r_matrix(r1: &Rep, r2: &Rep) -> Result<RMatrix> {
    if r1.half() != r2.half() {
        return Err(Error::InvalidParameter("representations use different q".into()));
    }
    let (d1, d2) = (r1.dim(), r2.dim());
    let half = r1.half();
    let mut diag = Vec::with_capacity(d1 * d2);
    for a in r1.two_weights() {
        for b in r2.two_weights() {
            diag.push(half.pow(a * b)?);
        }
    }
    let x = r1.kinv().mul(r1.f())?;
    let y = r2.e().mul(r2.k())?;
    let mut sum = Matrix::zeros(d1 * d2, d1 * d2);
    let (mut xn, mut yn) = (Matrix::identity(d1), Matrix::identity(d2));
    for n in 0..d1.max(d2) as u32 {
        if xn.is_zero() || yn.is_zero() {
            break;
        }
        sum = sum.add(&xn.kron(&yn).scale(&series_coefficient(r1, n)?))?;
        xn = xn.mul(&x)?;
        yn = yn.mul(&y)?;
    }
    Ok(RMatrix { matrix: Matrix::diagonal(diag).mul(&sum)?, dims: (d1, d2) })
}

impl RMatrix {
    /// `R̂ = P∘R : V₁⊗V₂ → V₂⊗V₁`.
    pub fn braiding(&self) -> Result<Matrix> {
        Matrix::flip(self.dims.0, self.dims.1).mul(&self.matrix)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntertwiningOutcome {
    pub generator: String,
    /// `R·Δ(x) = Δ^op(x)·R`
    pub r_form: bool,
    /// `R̂·Δ₁₂(x) = Δ₂₁(x)·R̂`, with `Δ₂₁` evaluated on `V₂⊗V₁`
    pub braided_form: bool,
}

impl IntertwiningOutcome {
    pub fn passed(&self) -> bool {
        self.r_form && self.braided_form
    }
}

/// Intertwining property for `x ∈ {E, F, K, K⁻¹}` with the coproduct of the structure maps.
pub fn check_intertwining(maps: &StructureMaps, r1: &Rep, r2: &Rep, r: &RMatrix) -> Result<Vec<IntertwiningOutcome>> {
    let rhat = r.braiding()?;
    [Generator::E, Generator::F, Generator::K, Generator::Kinv]
        .into_iter()
        .map(|g| {
            let delta = maps.coproduct_generator(g)?;
            let op = delta.swap_legs(0, 1);
            let d12 = eval_tensor(&delta, &[r1, r2])?;
            let op12 = eval_tensor(&op, &[r1, r2])?;
            let d21 = eval_tensor(&delta, &[r2, r1])?;
            Ok(IntertwiningOutcome {
                generator: g.to_string(),
                r_form: r.matrix.mul(&d12)? == op12.mul(&r.matrix)?,
                braided_form: rhat.mul(&d12)? == d21.mul(&rhat)?,
            })
        })
        .collect()
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `ρ⊗ρ⊗ρ`. Returns the difference when it fails.
pub fn check_yang_baxter(rep: &Rep) -> Result<Option<Matrix>> {
    let d = rep.dim();
    let r = r_matrix(rep, rep)?.matrix;
    let id = Matrix::identity(d);
    let r12 = r.kron(&id);
    let r23 = id.kron(&r);
    let p23 = id.kron(&Matrix::flip(d, d));
    let r13 = Matrix::mul_all(&[&p23, &r12, &p23])?;
    let lhs = Matrix::mul_all(&[&r12, &r13, &r23])?;
    let rhs = Matrix::mul_all(&[&r23, &r13, &r12])?;
    let diff = lhs.sub(&rhs)?;
    Ok(if diff.is_zero() { None } else { Some(diff) })
}

/// Exchange factor of two fields. For mixed representations this is `R̂`;
/// for `ρ₁ = ρ₂` it is `λ_ρ = q_r^{2j(j+1)}·R̂`, whose classical limit is the flip.
pub fn noncomm_factor(r1: &Rep, r2: &Rep) -> Result<Matrix> {
    let b = r_matrix(r1, r2)?.braiding()?;
    if r1 == r2 {
        let tj = r1.two_j() as i32;
        Ok(b.scale(&r1.half().pow(tj * (tj + 2))?))
    } else {
        Ok(b)
    }
}

/// Eigenvalue pair `(a, b)` with `(λ − a)(λ − b) = 0`, searched among the
/// Hecke candidates `q_r^{±2}, q_r^{±1}` against `−1`.
pub fn hecke_pattern(lambda: &Matrix, q_r: &Scalar) -> Result<Option<(Scalar, Scalar)>> {
    let n = lambda.rows();
    let id = Matrix::identity(n);
    let minus_one = Scalar::from_i64(-1);
    for e in [2, -2, 1, -1] {
        let a = q_r.pow(e)?;
        let f1 = lambda.sub(&id.scale(&a))?;
        let f2 = lambda.sub(&id.scale(&minus_one))?;
        if f1.mul(&f2)?.is_zero() {
            return Ok(Some((a, minus_one)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraConfig;

    fn setup(two_j: u32) -> (StructureMaps, Rep) {
        let cfg = AlgebraConfig::default();
        (StructureMaps::new(cfg.clone()).unwrap(), Rep::spin(two_j, &cfg).unwrap())
    }

    #[test]
    fn intertwines_spin_half_and_one() {
        for (a, b) in [(1, 1), (2, 2), (1, 2)] {
            let cfg = AlgebraConfig::default();
            let maps = StructureMaps::new(cfg.clone()).unwrap();
            let r1 = Rep::spin(a, &cfg).unwrap();
            let r2 = Rep::spin(b, &cfg).unwrap();
            let r = r_matrix(&r1, &r2).unwrap();
            for o in check_intertwining(&maps, &r1, &r2, &r).unwrap() {
                assert!(o.passed(), "({a},{b}) {o:?}");
            }
        }
    }

    #[test]
    fn yang_baxter_spin_half_and_one() {
        for two_j in 1..=2 {
            let (_, r) = setup(two_j);
            assert!(check_yang_baxter(&r).unwrap().is_none());
        }
    }

    #[test]
    fn classical_limits() {
        let (_, r) = setup(1);
        let rm = r_matrix(&r, &r).unwrap();
        assert!(rm.matrix.classical_limit().unwrap().is_identity());
        let lambda = noncomm_factor(&r, &r).unwrap();
        assert_eq!(lambda.classical_limit().unwrap(), Matrix::flip(2, 2));
    }

    #[test]
    fn r_is_invertible() {
        let (_, r) = setup(2);
        let rm = r_matrix(&r, &r).unwrap();
        assert!(rm.matrix.mul(&rm.matrix.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn spin_half_hecke() {
        let (_, r) = setup(1);
        let lambda = noncomm_factor(&r, &r).unwrap();
        let (a, b) = hecke_pattern(&lambda, r.q_r()).unwrap().expect("hecke relation");
        assert_eq!(b, Scalar::from_i64(-1));
        assert!(a == r.q_r().pow(2).unwrap() || a == r.q_r().pow(-2).unwrap());
    }
}
