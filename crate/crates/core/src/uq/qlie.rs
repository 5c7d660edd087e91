use super::matrix::Matrix;
use super::rep::Rep;
use crate::algebra::{AlgebraElement, Generator, Word};
use crate::error::{Error, Result};
use crate::hopf::{StructureMaps, TensorElement};
use crate::scalar::Scalar;
use serde::Serialize;
use std::collections::BTreeMap;

/// Weight labels of the basis `(T⁺, T⁰, T⁻)`.
pub const LABELS: [&str; 3] = ["+", "0", "-"];

/// The quantum Lie algebra inside U_q(sl2).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumLieBasis {
    /// `T⁺, T⁰, T⁻` as elements of the word algebra.
    pub elements: Vec<AlgebraElement>,
    /// Smallest word degree at which `T⁺` was found.
    pub degree: usize,
    /// The adjoint representation on `span(T)`.
    pub adjoint: Rep,
    /// `ad Tᵃ(Tᵇ) = Σ_c f[a][b][c]·Tᶜ`.
    pub f: Vec<Vec<Vec<Scalar>>>,
}

/// Coordinates of elements in their joint word basis.
pub(crate) struct WordCoords {
    index: BTreeMap<Word, usize>,
}

impl WordCoords {
    pub(crate) fn new<'a>(els: impl IntoIterator<Item = &'a AlgebraElement>) -> Self {
        let mut index = BTreeMap::new();
        for e in els {
            for w in e.terms().keys() {
                let n = index.len();
                index.entry(w.clone()).or_insert(n);
            }
        }
        WordCoords { index }
    }

    pub(crate) fn contains_all(&self, e: &AlgebraElement) -> bool {
        e.terms().keys().all(|w| self.index.contains_key(w))
    }

    pub(crate) fn vector(&self, e: &AlgebraElement) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.index.len()];
        for (w, c) in e.terms() {
            v[self.index[w]] = c.clone();
        }
        v
    }

    pub(crate) fn matrix(&self, els: &[AlgebraElement]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = els.iter().map(|e| self.vector(e)).collect();
        Matrix::from_fn(self.index.len(), els.len(), |i, j| cols[j][i].clone())
    }
}

/// Coordinates of `y` in `span(basis)`, or `None` when `y` lies outside it.
pub(crate) fn coordinates(basis: &[AlgebraElement], y: &AlgebraElement) -> Option<Vec<Scalar>> {
    let wc = WordCoords::new(basis.iter());
    if !wc.contains_all(y) {
        return None;
    }
    wc.matrix(basis).solve(&wc.vector(y))
}

/// Normal words `Kⁿ Fᵃ Eᵇ` of total length at most `deg` and weight `b − a = 1`.
fn weight_one_words(deg: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for a in 0..deg {
        let b = a + 1;
        if a + b > deg {
            break;
        }
        let room = (deg - a - b) as i32;
        for n in -room..=room {
            let g = if n < 0 { Generator::Kinv } else { Generator::K };
            let mut w: Word = std::iter::repeat_n(g, n.unsigned_abs() as usize).collect();
            w.extend(std::iter::repeat_n(Generator::F, a));
            w.extend(std::iter::repeat_n(Generator::E, b));
            out.push(w);
        }
    }
    out
}

fn ad_gen(maps: &StructureMaps, g: Generator, y: &AlgebraElement) -> Result<AlgebraElement> {
    maps.adjoint_action(&AlgebraElement::generator(g), y)
}

/// Highest-weight vector of the adjoint module: the lowest-degree element of
/// weight 1 annihilated by `ad E`, normalised on the word `K⁻¹E`.
fn highest_vector(maps: &StructureMaps, max_degree: usize) -> Result<(AlgebraElement, usize)> {
    let target: Word = vec![Generator::Kinv, Generator::E];
    for deg in 1..=max_degree {
        let words = weight_one_words(deg);
        let images: Vec<AlgebraElement> = words
            .iter()
            .map(|w| ad_gen(maps, Generator::E, &AlgebraElement::from_word(w.clone())))
            .collect::<Result<_>>()?;
        let wc = WordCoords::new(images.iter());
        let kernel = wc.matrix(&images).nullspace();
        if kernel.is_empty() {
            continue;
        }
        let pos = words.iter().position(|w| *w == target);
        let v = pos
            .and_then(|p| kernel.iter().find(|v| !v[p].is_zero()))
            .unwrap_or(&kernel[0]);
        let lead = match pos {
            Some(p) if !v[p].is_zero() => v[p].clone(),
            _ => v.iter().find(|c| !c.is_zero()).unwrap().clone(),
        };
        let lead_inv = lead.inv()?;
        let t = AlgebraElement::from_terms(words.iter().cloned().zip(v.iter().map(|c| c * &lead_inv)));
        return Ok((maps.rs().normal_form(&t)?, deg));
    }
    Err(Error::NoInvariantSubspace(max_degree))
}

/// Finds `(T⁺, T⁰, T⁻)` with `T⁺ = K⁻¹E`, `T⁰ = ad F(T⁺)/[2]`, `T⁻ = ad F(T⁰)`,
/// verifies closure under `ad E, ad F, ad K^{±1}` and derives `f^{ab}_c`.
pub fn quantum_lie_basis(maps: &StructureMaps, max_degree: usize) -> Result<QuantumLieBasis> {
    if max_degree < 2 {
        return Err(Error::InvalidParameter("max_degree must be at least 2".into()));
    }
    let (tp, degree) = highest_vector(maps, max_degree)?;
    let q_r = maps.q_r();
    let t0 = ad_gen(maps, Generator::F, &tp)?.scale(&Scalar::q_int(2, &q_r).inv()?);
    let tm = ad_gen(maps, Generator::F, &t0)?;
    let elements = vec![tp, t0, tm];

    let wc = WordCoords::new(elements.iter());
    let mut with_unit = elements.clone();
    with_unit.push(AlgebraElement::one());
    let wcu = WordCoords::new(with_unit.iter());
    if wc.matrix(&elements).rank() < 3 || wcu.matrix(&with_unit).rank() < 4 {
        return Err(Error::NoInvariantSubspace(max_degree));
    }

    let mut mats = BTreeMap::new();
    for g in [Generator::E, Generator::F, Generator::K, Generator::Kinv] {
        let mut m = Matrix::zeros(3, 3);
        for (b, t) in elements.iter().enumerate() {
            let image = ad_gen(maps, g, t)?;
            let c = coordinates(&elements, &image).ok_or(Error::NoInvariantSubspace(max_degree))?;
            for (a, x) in c.into_iter().enumerate() {
                m.set(a, b, x);
            }
        }
        mats.insert(g, m);
    }
    let cfg = maps.rs().config();
    let adjoint = Rep::from_matrices(2, cfg, mats[&Generator::E].clone(), mats[&Generator::F].clone(), mats[&Generator::K].clone())?;
    if adjoint.kinv() != &mats[&Generator::Kinv] {
        return Err(Error::InvalidParameter("ad K^-1 is not the inverse of ad K".into()));
    }

    let rho: Vec<Matrix> = elements.iter().map(|t| adjoint.eval(t)).collect::<Result<_>>()?;
    let f = (0..3)
        .map(|a| (0..3).map(|b| (0..3).map(|c| rho[a].get(c, b).clone()).collect()).collect())
        .collect();
    Ok(QuantumLieBasis { elements, degree, adjoint, f })
}

impl QuantumLieBasis {
    /// `ρ_ad(Tᵃ)`, the matrix of `ad Tᵃ` on `span(T)`.
    pub fn ad_matrices(&self) -> Result<Vec<Matrix>> {
        self.elements.iter().map(|t| self.adjoint.eval(t)).collect()
    }

    /// Images of `Tᵃ` in another representation.
    pub fn in_rep(&self, rep: &Rep) -> Result<Vec<Matrix>> {
        self.elements.iter().map(|t| rep.eval(t)).collect()
    }

    /// Transforms `f` to the basis `Xᵢ = sᵢ·Tⁱ`.
    pub fn rescaled_f(&self, scale: &[Scalar; 3]) -> Result<Vec<Vec<Vec<Scalar>>>> {
        (0..3)
            .map(|a| {
                (0..3)
                    .map(|b| {
                        (0..3)
                            .map(|c| (&(&scale[a] * &scale[b]) * &self.f[a][b][c]).checked_div(&scale[c]))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// At `s = 1`, in the basis `e = T⁺, h = −2T⁰, f = −T⁻`, the constants are those of sl2:
    /// `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn classical_structure_matches_sl2(&self) -> Result<bool> {
        let scale = [Scalar::one(), Scalar::from_i64(-2), Scalar::from_i64(-1)];
        let f = self.rescaled_f(&scale)?;
        let mut expected = vec![vec![vec![Scalar::zero(); 3]; 3]; 3];
        expected[1][0][0] = Scalar::from_i64(2);
        expected[0][1][0] = Scalar::from_i64(-2);
        expected[1][2][2] = Scalar::from_i64(-2);
        expected[2][1][2] = Scalar::from_i64(2);
        expected[0][2][1] = Scalar::one();
        expected[2][0][1] = Scalar::from_i64(-1);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if Scalar::constant(f[a][b][c].classical_limit()?) != expected[a][b][c] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Outcome of fitting `Δ(Tᵃ) = Tᵃ⊗C + uᵃ_b⊗Tᵇ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoproductShape {
    /// `C` extracted separately for each `a`.
    pub c: Vec<AlgebraElement>,
    /// `u[a][b]`.
    pub u: Vec<Vec<AlgebraElement>>,
    /// `Δ(Tᵃ) − Tᵃ⊗C_a − uᵃ_b⊗Tᵇ` for each `a`.
    pub residual: Vec<TensorElement>,
    /// Whether the `C_a` coincide.
    pub common_c: bool,
    /// `ad uᵃ_b(Tᶜ) = σ^{ac}_{db}Tᵈ`, tested only when the shape holds.
    pub flip_relation: Option<bool>,
    /// `u` and `C` with `K, K⁻¹ ↦ 1` and `s ↦ 1`, when that limit exists.
    pub classical_u: Option<Vec<Vec<String>>>,
    pub classical_c: Option<Vec<String>>,
}

impl CoproductShape {
    pub fn holds(&self) -> bool {
        self.common_c && self.residual.iter().all(TensorElement::is_zero)
    }
}

fn classical_image(a: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (w, c) in a.terms() {
        let w: Word = w.iter().copied().filter(|g| !matches!(g, Generator::K | Generator::Kinv)).collect();
        out.add_term(w, c.clone());
    }
    Ok(out.map_coefficients(|c| c.clone()))
}

fn classical_string(a: &AlgebraElement) -> Result<String> {
    let img = classical_image(a)?;
    let mut out = AlgebraElement::zero();
    for (w, c) in img.terms() {
        out.add_term(w.clone(), Scalar::constant(c.classical_limit()?));
    }
    Ok(out.to_string())
}

/// Fits the coproduct of each `Tᵃ` to the shape `Tᵃ⊗C + uᵃ_b⊗Tᵇ`.
/// Leg 2 is decomposed along the row-reduced `span(T)`; what remains must be `Tᵃ⊗C`.
pub fn coproduct_shape(maps: &StructureMaps, basis: &QuantumLieBasis, sigma: &Matrix) -> Result<CoproductShape> {
    let ts = &basis.elements;
    let wc = WordCoords::new(ts.iter());
    let words: Vec<Word> = {
        let mut v: Vec<(usize, Word)> = wc.index.iter().map(|(w, &i)| (i, w.clone())).collect();
        v.sort();
        v.into_iter().map(|(_, w)| w).collect()
    };
    // rows of `tmat` are the T's in word coordinates
    let tmat = wc.matrix(ts).transpose();
    let (rref, pivots) = tmat.rref();
    // R_b = Σ_c m[b][c] T^c, with R_b the rref rows
    let rows: Vec<AlgebraElement> = (0..pivots.len())
        .map(|b| AlgebraElement::from_terms(words.iter().cloned().zip(rref.row(b).iter().cloned())))
        .collect();
    let m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| coordinates(ts, r).ok_or(Error::Singular))
        .collect::<Result<_>>()?;

    let mut cs = Vec::new();
    let mut us = Vec::new();
    let mut residual = Vec::new();
    for t in ts {
        let delta = maps.coproduct(t)?;
        let mut u_row = vec![AlgebraElement::zero(); 3];
        let mut rest = TensorElement::zero(2);
        for (b, &p) in pivots.iter().enumerate() {
            let pw = &words[p];
            let mut leg1 = AlgebraElement::zero();
            for (ws, c) in delta.terms() {
                if ws[1] == *pw {
                    leg1.add_term(ws[0].clone(), c.clone());
                }
            }
            for (c_idx, mc) in m[b].iter().enumerate() {
                u_row[c_idx] = u_row[c_idx].add(&leg1.scale(mc));
            }
        }
        let mut fitted = TensorElement::zero(2);
        for (b, ub) in u_row.iter().enumerate() {
            fitted = fitted.add(&TensorElement::pure(&[ub.clone(), ts[b].clone()]));
        }
        rest = rest.add(&delta.sub(&fitted));
        let (w1, c1) = t.terms().iter().next().expect("nonzero T");
        let mut c_elem = AlgebraElement::zero();
        for (ws, c) in rest.terms() {
            if ws[0] == *w1 {
                c_elem.add_term(ws[1].clone(), c.checked_div(c1)?);
            }
        }
        let res = rest.sub(&TensorElement::pure(&[t.clone(), c_elem.clone()]));
        cs.push(c_elem);
        us.push(u_row);
        residual.push(res);
    }
    let common_c = cs.windows(2).all(|w| w[0] == w[1]);
    let mut shape = CoproductShape { c: cs, u: us, residual, common_c, flip_relation: None, classical_u: None, classical_c: None };
    if shape.holds() {
        shape.flip_relation = Some(flip_relation(maps, basis, &shape.u, sigma)?);
    }
    shape.classical_u = shape
        .u
        .iter()
        .map(|row| row.iter().map(classical_string).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
        .ok();
    shape.classical_c = shape.c.iter().map(classical_string).collect::<Result<Vec<_>>>().ok();
    Ok(shape)
}

fn flip_relation(maps: &StructureMaps, basis: &QuantumLieBasis, u: &[Vec<AlgebraElement>], sigma: &Matrix) -> Result<bool> {
    let ts = &basis.elements;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let lhs = maps.adjoint_action(&u[a][b], &ts[c])?;
                let mut rhs = AlgebraElement::zero();
                for (d, td) in ts.iter().enumerate() {
                    rhs = rhs.add(&td.scale(sigma.get(a * 3 + c, d * 3 + b)));
                }
                if maps.rs().normal_form(&lhs.sub(&rhs))? != AlgebraElement::zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Braided Jacobi identity `ad Tᵃ ad Tᵇ − σ^{ab}_{cd} ad Tᶜ ad Tᵈ = f^{ab}_e ad Tᵉ`
/// for a candidate braiding; report-only.
pub fn braided_jacobi(basis: &QuantumLieBasis, sigma: &Matrix) -> Result<bool> {
    let ad = basis.ad_matrices()?;
    for a in 0..3 {
        for b in 0..3 {
            let mut lhs = ad[a].mul(&ad[b])?;
            for c in 0..3 {
                for d in 0..3 {
                    let s = sigma.get(a * 3 + b, c * 3 + d);
                    if !s.is_zero() {
                        lhs = lhs.sub(&ad[c].mul(&ad[d])?.scale(s))?;
                    }
                }
            }
            let mut rhs = Matrix::zeros(3, 3);
            for (e, m) in ad.iter().enumerate() {
                rhs = rhs.add(&m.scale(&basis.f[a][b][e]))?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}


#[cfg(test)]
mod report_tests {
    use super::*;
    use crate::algebra::AlgebraConfig;
    use crate::susy::{bracket_adjoint_consistency, BasisSymbol, BracketTable};
    use crate::uq::noncomm_factor;

    #[test]
    fn quantum_pairs_match_adjoint_action() {
        let maps = StructureMaps::new(AlgebraConfig::default()).unwrap();
        let b = quantum_lie_basis(&maps, 2).unwrap();
        let table = BracketTable::new(2).unwrap().with_quantum(b.f.clone());
        for x in 1..=3 {
            for y in 1..=3 {
                let o = bracket_adjoint_consistency(&maps, &table, Some(&b.elements), BasisSymbol::T(x), BasisSymbol::T(y)).unwrap();
                assert!(o.passed(), "{:?}", o.witness());
            }
        }
    }

    #[test]
    fn report_only_items_run() {
        let maps = StructureMaps::new(AlgebraConfig::default()).unwrap();
        let b = quantum_lie_basis(&maps, 2).unwrap();
        let sigma = noncomm_factor(&b.adjoint, &b.adjoint).unwrap();
        let shape = coproduct_shape(&maps, &b, &sigma).unwrap();
        assert!(shape.holds());
        assert!(shape.flip_relation.is_some());
        let one = |n: usize| (0..n).map(|_| "1".to_string()).collect::<Vec<_>>();
        assert_eq!(shape.classical_c, Some(one(3)));
        let u1 = shape.classical_u.unwrap();
        for (a, row) in u1.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                assert_eq!(x, if a == b { "1" } else { "0" });
            }
        }
        braided_jacobi(&b, &sigma).unwrap();
    }
}
