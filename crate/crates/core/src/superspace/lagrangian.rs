use super::calculus::{
    eta, expand_superfield, field_strength, field_strength_superfield, scalar_field, sigma, sigmabar, spinor_dn,
    spinor_up, SuperfieldKind,
};
use super::coeff::Coeff;
use super::expr::{Measure, Monomial, SuperExpr};
use super::field::FieldKind;
use crate::error::{Error, Result};
use crate::scalar::Gq;
use serde::Serialize;

/// Canonical representative modulo total derivatives: in every bilinear
/// monomial the first factor carries no derivatives (`∂X·Y ≡ −X·∂Y`), and
/// single fields under a derivative are dropped.
pub fn ibp_canonical(e: &SuperExpr) -> Result<SuperExpr> {
    let mut out = SuperExpr::zero();
    for (m, c) in e.terms() {
        if m.coords != 0 {
            return Err(Error::UnsupportedTerm(format!("Grassmann coordinates in {m}")));
        }
        match m.fields.len() {
            0 => out.add_term(m.clone(), c.clone()),
            1 => {
                if m.fields[0].derivative_order() == 0 {
                    out.add_term(m.clone(), c.clone());
                }
            }
            2 => {
                let (x, mut y) = (m.fields[0], m.fields[1]);
                for mu in 0..4 {
                    y.derivatives[mu] += x.derivatives[mu];
                }
                let c = if x.derivative_order() % 2 == 1 { -c } else { c.clone() };
                let x = x.without_derivatives();
                // X ∂^α X ≡ ±(−1)^{|α|} X ∂^α X, which vanishes when the sign is −1
                if x == y.without_derivatives() && (y.derivative_order() % 2 == 1) != x.is_fermionic() {
                    continue;
                }
                out.add_term(Monomial { coords: 0, fields: vec![x, y] }, c);
            }
            n => return Err(Error::UnsupportedTerm(format!("{m} has field degree {n}; only bilinear Lagrangians are compared"))),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IbpOutcome {
    pub passed: bool,
    /// Canonical form of `L1 − L2` when they differ.
    pub witness: Option<SuperExpr>,
}

pub fn equal_mod_ibp(l1: &SuperExpr, l2: &SuperExpr) -> Result<IbpOutcome> {
    let diff = ibp_canonical(&l1.sub(l2))?;
    let passed = diff.is_zero();
    Ok(IbpOutcome { passed, witness: (!passed).then_some(diff) })
}

/// `k` with `computed ≡ k·target` modulo total derivatives.
fn ratio_mod_ibp(computed: &SuperExpr, target: &SuperExpr) -> Result<Option<Coeff>> {
    let a = ibp_canonical(computed)?;
    let b = ibp_canonical(target)?;
    let Some((m, cb)) = b.terms().iter().next() else {
        return Ok(a.is_zero().then(Coeff::zero));
    };
    let Some(ca) = a.terms().get(m) else { return Ok(None) };
    let k = ca.checked_div(cb);
    Ok(k.filter(|k| b.scale(k) == a))
}

/// `η^{μν} ∂_μX ∂_νY`
fn kinetic(x: FieldKind, y: FieldKind) -> SuperExpr {
    (0..4).fold(SuperExpr::zero(), |acc, mu| {
        acc.add(&scalar_field(x).partial(mu).mul(&scalar_field(y).partial(mu)).scale(&Coeff::from(eta(mu))))
    })
}

/// `χ̄σ̄^μ∂_μχ = χ̄_α̇ σ̄^{μα̇α} ∂_μχ_α`
fn barred_kinetic(bar: FieldKind, unbar: FieldKind) -> SuperExpr {
    let mut acc = SuperExpr::zero();
    for mu in 0..4 {
        for ad in 0..2 {
            for a in 0..2 {
                let s = sigmabar(mu, ad, a);
                if !s.is_zero() {
                    acc = acc.add(&spinor_dn(bar, ad).mul(&spinor_dn(unbar, a).partial(mu)).scale(&Coeff::from(s)));
                }
            }
        }
    }
    acc
}

/// `χσ^μ∂_μχ̄ = χ^α σ^μ_{αα̇} ∂_μχ̄^α̇`
fn unbarred_kinetic(unbar: FieldKind, bar: FieldKind) -> SuperExpr {
    let mut acc = SuperExpr::zero();
    for mu in 0..4 {
        for a in 0..2 {
            for ad in 0..2 {
                let s = sigma(mu, a, ad);
                if !s.is_zero() {
                    acc = acc.add(&spinor_up(unbar, a).mul(&spinor_up(bar, ad).partial(mu)).scale(&Coeff::from(s)));
                }
            }
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WzReport {
    pub passed: bool,
    /// `∫d⁴θ Φ†Φ`
    pub lagrangian: SuperExpr,
    /// Ratios to the target terms `F†F`, `−η^{μν}∂_μφ†∂_νφ` and `−iψ̄σ̄^μ∂_μψ`.
    pub auxiliary_coefficient: Option<Coeff>,
    pub scalar_kinetic_coefficient: Option<Coeff>,
    pub fermion_kinetic_coefficient: Option<Coeff>,
    pub witness: Option<SuperExpr>,
}

/// `∫d⁴θ Φ†Φ ≡ F†F − η^{μν}∂_μφ†∂_νφ − iψ̄σ̄^μ∂_μψ` modulo total derivatives.
pub fn verify_wz_lagrangian() -> Result<WzReport> {
    use FieldKind::*;
    let phi = expand_superfield(SuperfieldKind::Chiral);
    let phibar = expand_superfield(SuperfieldKind::Antichiral);
    let lagrangian = phibar.mul(&phi).berezin(Measure::D4Theta);
    let aux = scalar_field(FDag).mul(&scalar_field(F));
    let scalar = kinetic(PhiDag, Phi).scale(&Coeff::from(-1));
    let fermion = barred_kinetic(PsiBar, Psi).scale(&Coeff::from(-Gq::i()));
    let target = aux.add(&scalar).add(&fermion);
    let outcome = equal_mod_ibp(&lagrangian, &target)?;
    Ok(WzReport {
        passed: outcome.passed,
        auxiliary_coefficient: ratio_mod_ibp(&lagrangian.restrict(&[F, FDag]), &aux)?,
        scalar_kinetic_coefficient: ratio_mod_ibp(&lagrangian.restrict(&[Phi, PhiDag]), &scalar)?,
        fermion_kinetic_coefficient: ratio_mod_ibp(&lagrangian.restrict(&[Psi, PsiBar]), &fermion)?,
        witness: outcome.witness,
        lagrangian,
    })
}

/// Coupling `g` and vacuum angle `θ`, with `τ = θ/2π + 4πi/g²`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct LagrangianParams {
    pub g: Option<Gq>,
    pub theta: Option<Gq>,
}

impl LagrangianParams {
    /// `Im τ = 4π/g² > 0` requires a real nonzero `g`; `θ` must be real.
    pub fn validate(&self) -> Result<()> {
        if let Some(g) = &self.g {
            if g.is_zero() || !g.is_real() {
                return Err(Error::InvalidParameter("g must be real and nonzero so that Im tau > 0".into()));
            }
        }
        if let Some(t) = &self.theta {
            if !t.is_real() {
                return Err(Error::InvalidParameter("theta must be real".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymReport {
    pub passed: bool,
    /// Coefficient of `F_{μν}F^{μν}` in units of `1/g²`.
    pub f_squared: Option<Coeff>,
    /// Coefficient of `F_{μν}F̃^{μν}` in units of `θ/π²`.
    pub f_dual: Option<Coeff>,
    /// Coefficient of `D²` in units of `1/g²`.
    pub d_squared: Option<Coeff>,
    /// Coefficient of `λσ^μ∂_μλ̄ + λ̄σ̄^μ∂_μλ` in units of `1/g²`.
    pub gaugino: Option<Coeff>,
    /// Sign of `ε^{0123}` in `F̃^{μν} = ½ε^{μνρσ}F_{ρσ}`.
    pub epsilon_0123: i8,
    /// The parity-odd fermion bilinear is a total derivative.
    pub odd_fermions_total_derivative: bool,
    /// Numeric values of the four coefficients when `g` and `θ` are supplied.
    pub numeric: Option<[f64; 4]>,
    /// `X = ∫d²θ W^αW_α`
    pub chiral_integral: SuperExpr,
}

/// `ε^{μνρσ}` with `ε^{0123} = 1`.
fn levi_civita(idx: [usize; 4]) -> i64 {
    if (0..4).any(|i| (i + 1..4).any(|j| idx[i] == idx[j])) {
        return 0;
    }
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `(1/8π) Im(τ ∫d²θ W^αW_α) = A/(4g²) + θB/(32π²)` with `A = X + X†`, `B = −i(X − X†)`.
pub fn verify_sym_abelian(params: &LagrangianParams) -> Result<SymReport> {
    use FieldKind::*;
    params.validate()?;
    let w: Vec<SuperExpr> = (0..2).map(field_strength_superfield).collect();
    // W^α W_α = ε^{αβ} W_β W_α
    let ww = w[1].mul(&w[0]).sub(&w[0].mul(&w[1]));
    // F-term of a chiral superfield, read off at θ̄ = 0
    let x = ww.berezin(Measure::D2Theta).component(0);
    let xc = x.conj();
    let a = x.add(&xc);
    let b = x.sub(&xc).scale(&Coeff::from(-Gq::i()));

    let mut f_sq = SuperExpr::zero();
    let mut eps_ff = SuperExpr::zero();
    for m in 0..4 {
        for n in 0..4 {
            if m == n {
                continue;
            }
            let fmn = field_strength(m, n);
            f_sq = f_sq.add(&fmn.mul(&fmn).scale(&Coeff::from(eta(m) * eta(n))));
            for r in 0..4 {
                for s in 0..4 {
                    let e = levi_civita([m, n, r, s]);
                    if e != 0 {
                        eps_ff = eps_ff.add(&fmn.mul(&field_strength(r, s)).scale(&Coeff::from(e)));
                    }
                }
            }
        }
    }
    let d_sq = scalar_field(D).mul(&scalar_field(D));
    let gaugino = unbarred_kinetic(Lambda, LambdaBar).add(&barred_kinetic(LambdaBar, Lambda));

    let r_f = ratio_mod_ibp(&a.restrict(&[A]), &f_sq)?;
    let r_d = ratio_mod_ibp(&a.restrict(&[D]), &d_sq)?;
    let r_l = ratio_mod_ibp(&a.restrict(&[Lambda, LambdaBar]), &gaugino)?;
    // no integration by parts here: ε^{μνρσ}F_{μν}F_{ρσ} is itself a total derivative
    let b_aa = b.restrict(&[A]);
    let k_eps = eps_ff.terms().iter().next().and_then(|(m, c)| b_aa.terms().get(m).and_then(|x| x.checked_div(c)));
    let k_eps = k_eps.filter(|k| eps_ff.scale(k) == b_aa);
    let odd_fermions_total_derivative = ibp_canonical(&b.restrict(&[Lambda, LambdaBar]))?.is_zero();
    let b_d_zero = b.restrict(&[D]).is_zero();

    let quarter = Coeff::ratio(1, 4);
    let f_squared = r_f.map(|r| &r * &quarter);
    let d_squared = r_d.map(|r| &r * &quarter);
    let gaugino_c = r_l.map(|r| &r * &quarter);
    // B_AA = k·εFF = 2k·FF̃, entering as θ/(32π²)
    let (epsilon_0123, f_dual) = match k_eps {
        Some(k) => {
            let c = &k * &Coeff::ratio(1, 16);
            let positive = c.as_gq().map(|g| g.re > num_rational::BigRational::from_integer(0.into())).unwrap_or(false);
            if positive {
                (1, Some(c))
            } else {
                (-1, Some(-&c))
            }
        }
        None => (1, None),
    };

    let expected = [
        (&f_squared, Coeff::ratio(-1, 4)),
        (&f_dual, Coeff::ratio(1, 32)),
        (&d_squared, Coeff::ratio(1, 2)),
        (&gaugino_c, Coeff::from(Gq::from_ratio(-1, 2) * Gq::i())),
    ];
    let coefficients_match = expected.iter().all(|(got, want)| got.as_ref() == Some(want));
    let passed = coefficients_match && odd_fermions_total_derivative && b_d_zero;

    let numeric = match (&params.g, &params.theta) {
        (Some(g), Some(theta)) => {
            let g = g.to_f64_pair().0;
            let th = theta.to_f64_pair().0;
            let pi2 = std::f64::consts::PI * std::f64::consts::PI;
            let val = |c: &Option<Coeff>, scale: f64| c.as_ref().and_then(|c| c.as_gq()).map(|q| q.to_f64_pair().0 * scale).unwrap_or(f64::NAN);
            Some([
                val(&f_squared, 1.0 / (g * g)),
                val(&f_dual, th / pi2),
                val(&d_squared, 1.0 / (g * g)),
                gaugino_c.as_ref().and_then(|c| c.as_gq()).map(|q| q.to_f64_pair().1 / (g * g)).unwrap_or(f64::NAN),
            ])
        }
        _ => None,
    };

    Ok(SymReport {
        passed,
        f_squared,
        f_dual,
        d_squared,
        gaugino: gaugino_c,
        epsilon_0123,
        odd_fermions_total_derivative,
        numeric,
        chiral_integral: x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::calculus::field;

    #[test]
    fn ibp_examples() {
        use FieldKind::*;
        let lhs = kinetic(PhiDag, Phi);
        let rhs = (0..4).fold(SuperExpr::zero(), |acc, mu| {
            acc.add(&scalar_field(PhiDag).mul(&scalar_field(Phi).partial(mu).partial(mu)).scale(&Coeff::from(-eta(mu))))
        });
        assert!(equal_mod_ibp(&lhs, &rhs).unwrap().passed);

        let l1 = spinor_dn(Psi, 0).mul(&spinor_dn(PsiBar, 1).partial(2));
        let l2 = spinor_dn(Psi, 0).partial(2).mul(&spinor_dn(PsiBar, 1)).scale(&Coeff::from(-1));
        assert!(equal_mod_ibp(&l1, &l2).unwrap().passed);

        let ff = scalar_field(FDag).mul(&scalar_field(F));
        let o = equal_mod_ibp(&ff, &ff.scale(&Coeff::from(2))).unwrap();
        assert!(!o.passed);
        assert_eq!(o.witness.unwrap(), ff.scale(&Coeff::from(-1)));
    }

    #[test]
    fn trilinear_terms_are_rejected() {
        let t = SuperExpr::product(&[scalar_field(FieldKind::Phi), scalar_field(FieldKind::D), field(FieldKind::A, 1)]);
        assert!(matches!(ibp_canonical(&t), Err(Error::UnsupportedTerm(_))));
    }

    #[test]
    fn wess_zumino() {
        let r = verify_wz_lagrangian().unwrap();
        assert!(r.passed, "{:?}", r.witness.map(|w| w.to_string()));
        for c in [&r.auxiliary_coefficient, &r.scalar_kinetic_coefficient, &r.fermion_kinetic_coefficient] {
            assert_eq!(c.as_ref(), Some(&Coeff::one()));
        }
    }

    #[test]
    fn abelian_gauge_sector() {
        let r = verify_sym_abelian(&LagrangianParams::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.epsilon_0123, -1);
    }

    #[test]
    fn params_validation() {
        let bad = LagrangianParams { g: Some(Gq::zero()), theta: None };
        assert!(verify_sym_abelian(&bad).is_err());
        let ok = LagrangianParams { g: Some(Gq::from_i64(2)), theta: Some(Gq::one()) };
        let n = verify_sym_abelian(&ok).unwrap().numeric.unwrap();
        assert_eq!(n[2], 0.125);
    }
}
