use super::matrix::Matrix;
use super::rep::Rep;
use super::rmatrix::series_coefficient;
use crate::algebra::{AlgebraElement, Generator};
use crate::error::Result;
use crate::hopf::StructureMaps;

/// `u = Σ S(ℛ₂)ℛ₁` evaluated in `ρ`, with `S` taken from the structure maps.
pub fn quantum_trace_element(maps: &StructureMaps, rep: &Rep) -> Result<Matrix> {
    let d = rep.dim();
    let half = rep.half();
    let cartan = Matrix::diagonal(
        rep.two_weights().iter().map(|&m| half.pow(-m * m)).collect::<Result<_>>()?,
    );
    let x = rep.kinv().mul(rep.f())?;
    let mut u = Matrix::zeros(d, d);
    let mut xn = Matrix::identity(d);
    for n in 0..d as u32 {
        let ek: Vec<Generator> = (0..n).flat_map(|_| [Generator::E, Generator::K]).collect();
        let s_ek = rep.eval(&maps.antipode(&AlgebraElement::from_word(ek))?)?;
        let term = Matrix::mul_all(&[&s_ek, &cartan, &xn])?;
        u = u.add(&term.scale(&series_coefficient(rep, n)?))?;
        xn = xn.mul(&x)?;
    }
    Ok(u)
}

/// `u·ρ(x)·u⁻¹ = ρ(S²(x))` for `x ∈ {E, F, K}`; one entry per generator.
pub fn check_u_conjugation(maps: &StructureMaps, rep: &Rep, u: &Matrix) -> Result<Vec<(String, bool)>> {
    let uinv = u.inverse()?;
    [Generator::E, Generator::F, Generator::K]
        .into_iter()
        .map(|g| {
            let x = AlgebraElement::generator(g);
            let s2 = maps.antipode(&maps.antipode(&x)?)?;
            let lhs = Matrix::mul_all(&[u, rep.generator(g)?, &uinv])?;
            Ok((g.to_string(), lhs == rep.eval(&s2)?))
        })
        .collect()
}
