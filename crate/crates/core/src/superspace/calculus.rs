//! Wess–Bagger conventions: `η = diag(−1, 1, 1, 1)`, `σ⁰ = −1`, `σ̄⁰ = −1`,
//! `σ̄ⁱ = −σⁱ`, `ε¹² = −ε₁₂ = 1`, `ψχ = ψ^α χ_α`, `ψ̄χ̄ = ψ̄_α̇ χ̄^α̇`.
//! Spinor indices are 0-based in code and 1-based on field labels.

use super::coeff::Coeff;
use super::expr::SuperExpr;
use super::field::{FieldFactor, FieldKind};
use crate::scalar::Gq;
use serde::Serialize;

pub fn eta(mu: usize) -> i64 {
    if mu == 0 {
        -1
    } else {
        1
    }
}

/// `ε^{αβ}`
pub fn eps_up(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// `ε_{αβ}`
pub fn eps_dn(a: usize, b: usize) -> i64 {
    -eps_up(a, b)
}

/// `σ^μ_{αα̇}`
pub fn sigma(mu: usize, a: usize, ad: usize) -> Gq {
    let (i, one, zero) = (Gq::i(), Gq::one(), Gq::zero());
    match mu {
        0 => {
            if a == ad {
                -one
            } else {
                zero
            }
        }
        1 => {
            if a != ad {
                one
            } else {
                zero
            }
        }
        2 => match (a, ad) {
            (0, 1) => -i,
            (1, 0) => i,
            _ => zero,
        },
        _ => match (a, ad) {
            (0, 0) => one,
            (1, 1) => -one,
            _ => zero,
        },
    }
}

/// `σ̄^{μ α̇α} = ε^{α̇β̇} ε^{αβ} σ^μ_{ββ̇}`
pub fn sigmabar(mu: usize, ad: usize, a: usize) -> Gq {
    let mut acc = Gq::zero();
    for bd in 0..2 {
        for b in 0..2 {
            let e = eps_up(ad, bd) * eps_up(a, b);
            if e != 0 {
                acc += &(&Gq::from_i64(e) * &sigma(mu, b, bd));
            }
        }
    }
    acc
}

fn c(g: Gq) -> Coeff {
    Coeff::from(g)
}

fn ci(n: i64) -> Coeff {
    Coeff::from(n)
}

pub fn theta_up(a: usize) -> SuperExpr {
    SuperExpr::coord(a as u8)
}

pub fn thetabar_up(ad: usize) -> SuperExpr {
    SuperExpr::coord(2 + ad as u8)
}

/// `θ_α = ε_{αβ} θ^β`
pub fn theta_dn(a: usize) -> SuperExpr {
    (0..2).fold(SuperExpr::zero(), |acc, b| acc.add(&theta_up(b).scale(&ci(eps_dn(a, b)))))
}

/// `θ̄_α̇ = ε_{α̇β̇} θ̄^β̇`
pub fn thetabar_dn(ad: usize) -> SuperExpr {
    (0..2).fold(SuperExpr::zero(), |acc, b| acc.add(&thetabar_up(b).scale(&ci(eps_dn(ad, b)))))
}

/// `θθ = θ^α θ_α`
pub fn theta_sq() -> SuperExpr {
    (0..2).fold(SuperExpr::zero(), |acc, a| acc.add(&theta_up(a).mul(&theta_dn(a))))
}

/// `θ̄θ̄ = θ̄_α̇ θ̄^α̇`
pub fn thetabar_sq() -> SuperExpr {
    (0..2).fold(SuperExpr::zero(), |acc, a| acc.add(&thetabar_dn(a).mul(&thetabar_up(a))))
}

/// `θσ^μθ̄`
pub fn theta_sigma_thetabar(mu: usize) -> SuperExpr {
    let mut acc = SuperExpr::zero();
    for a in 0..2 {
        for ad in 0..2 {
            let s = sigma(mu, a, ad);
            if !s.is_zero() {
                acc = acc.add(&theta_up(a).mul(&thetabar_up(ad)).scale(&c(s)));
            }
        }
    }
    acc
}

pub fn field(kind: FieldKind, index: u8) -> SuperExpr {
    SuperExpr::field(FieldFactor::new(kind, index))
}

pub fn scalar_field(kind: FieldKind) -> SuperExpr {
    SuperExpr::field(FieldFactor::scalar(kind))
}

/// Spinor field with a lower index (0-based).
pub fn spinor_dn(kind: FieldKind, a: usize) -> SuperExpr {
    field(kind, a as u8 + 1)
}

/// Spinor field with a raised index, `χ^α = ε^{αβ} χ_β`.
pub fn spinor_up(kind: FieldKind, a: usize) -> SuperExpr {
    (0..2).fold(SuperExpr::zero(), |acc, b| acc.add(&spinor_dn(kind, b).scale(&ci(eps_up(a, b)))))
}

/// `F_{μν} = ∂_μ A_ν − ∂_ν A_μ`
pub fn field_strength(mu: usize, nu: usize) -> SuperExpr {
    field(FieldKind::A, nu as u8).partial(mu).sub(&field(FieldKind::A, mu as u8).partial(nu))
}

/// `f(x) ↦ f(x + sign·iθσθ̄)` by the terminating Taylor series.
pub fn shift_y(e: &SuperExpr, sign: i64) -> SuperExpr {
    let delta: Vec<SuperExpr> = (0..4).map(|mu| theta_sigma_thetabar(mu).scale(&c(Gq::from_i64(sign) * Gq::i()))).collect();
    let step = |x: &SuperExpr| (0..4).fold(SuperExpr::zero(), |acc, mu| acc.add(&delta[mu].mul(&x.partial(mu))));
    let mut total = e.clone();
    let mut term = e.clone();
    let mut k = 1;
    loop {
        term = step(&term).scale(&Coeff::ratio(1, k));
        if term.is_zero() {
            return total;
        }
        total = total.add(&term);
        k += 1;
    }
}

/// `D_α = ∂/∂θ^α + iσ^μ_{αα̇} θ̄^α̇ ∂_μ`
pub fn d(a: usize, e: &SuperExpr) -> SuperExpr {
    let mut r = e.d_coord(a as u8);
    for mu in 0..4 {
        let de = e.partial(mu);
        if de.is_zero() {
            continue;
        }
        for ad in 0..2 {
            let s = sigma(mu, a, ad);
            if !s.is_zero() {
                r = r.add(&thetabar_up(ad).mul(&de).scale(&c(&Gq::i() * &s)));
            }
        }
    }
    r
}

/// `D̄_α̇ = −∂/∂θ̄^α̇ − iθ^α σ^μ_{αα̇} ∂_μ`
pub fn dbar(ad: usize, e: &SuperExpr) -> SuperExpr {
    let mut r = e.d_coord(2 + ad as u8).scale(&ci(-1));
    for mu in 0..4 {
        let de = e.partial(mu);
        if de.is_zero() {
            continue;
        }
        for a in 0..2 {
            let s = sigma(mu, a, ad);
            if !s.is_zero() {
                r = r.add(&theta_up(a).mul(&de).scale(&c(&-Gq::i() * &s)));
            }
        }
    }
    r
}

/// `D² = D^α D_α = ε^{αβ} D_β D_α`
pub fn d_sq(e: &SuperExpr) -> SuperExpr {
    let mut r = SuperExpr::zero();
    for a in 0..2 {
        for b in 0..2 {
            let s = eps_up(a, b);
            if s != 0 {
                r = r.add(&d(b, &d(a, e)).scale(&ci(s)));
            }
        }
    }
    r
}

/// `D̄² = D̄_α̇ D̄^α̇ = ε^{α̇β̇} D̄_α̇ D̄_β̇`
pub fn dbar_sq(e: &SuperExpr) -> SuperExpr {
    let mut r = SuperExpr::zero();
    for a in 0..2 {
        for b in 0..2 {
            let s = eps_up(a, b);
            if s != 0 {
                r = r.add(&dbar(a, &dbar(b, e)).scale(&ci(s)));
            }
        }
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuperfieldKind {
    Chiral,
    Antichiral,
    VectorWz,
}

/// Component expansion in the `x` basis.
pub fn expand_superfield(kind: SuperfieldKind) -> SuperExpr {
    use FieldKind::*;
    let sqrt2 = Coeff::sqrt2();
    match kind {
        SuperfieldKind::Chiral => {
            let mut e = scalar_field(Phi);
            for a in 0..2 {
                e = e.add(&theta_up(a).mul(&spinor_dn(Psi, a)).scale(&sqrt2));
            }
            shift_y(&e.add(&theta_sq().mul(&scalar_field(F))), 1)
        }
        SuperfieldKind::Antichiral => {
            let mut e = scalar_field(PhiDag);
            for ad in 0..2 {
                e = e.add(&thetabar_dn(ad).mul(&spinor_up(PsiBar, ad)).scale(&sqrt2));
            }
            shift_y(&e.add(&thetabar_sq().mul(&scalar_field(FDag))), -1)
        }
        SuperfieldKind::VectorWz => {
            let mut v = SuperExpr::zero();
            for mu in 0..4 {
                v = v.sub(&theta_sigma_thetabar(mu).mul(&field(A, mu as u8)));
            }
            let tb_lb = (0..2).fold(SuperExpr::zero(), |acc, ad| acc.add(&thetabar_dn(ad).mul(&spinor_up(LambdaBar, ad))));
            let t_l = (0..2).fold(SuperExpr::zero(), |acc, a| acc.add(&theta_up(a).mul(&spinor_dn(Lambda, a))));
            v = v.add(&theta_sq().mul(&tb_lb).scale(&Coeff::i()));
            v = v.sub(&thetabar_sq().mul(&t_l).scale(&Coeff::i()));
            v.add(&SuperExpr::product(&[theta_sq(), thetabar_sq(), scalar_field(D)]).scale(&Coeff::ratio(1, 2)))
        }
    }
}

/// `W_α = −¼ D̄² D_α V` for the Wess–Zumino-gauge vector superfield.
pub fn field_strength_superfield(a: usize) -> SuperExpr {
    dbar_sq(&d(a, &expand_superfield(SuperfieldKind::VectorWz))).scale(&Coeff::ratio(-1, 4))
}

/// `W̄_α̇ = −¼ D² D̄_α̇ V`
pub fn field_strength_bar(ad: usize) -> SuperExpr {
    d_sq(&dbar(ad, &expand_superfield(SuperfieldKind::VectorWz))).scale(&Coeff::ratio(-1, 4))
}

/// `−iλ_α + θ_α D − (i/2)(σ^μσ̄^νθ)_α F_{μν} + θθ σ^μ_{αα̇}∂_μλ̄^α̇`, in `y` and shifted to `x`.
pub fn expected_field_strength(a: usize) -> SuperExpr {
    use FieldKind::*;
    let mut w = spinor_dn(Lambda, a).scale(&Coeff::from(-Gq::i()));
    w = w.add(&theta_dn(a).mul(&scalar_field(D)));
    let mut fpart = SuperExpr::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            if mu == nu {
                continue;
            }
            let fmn = field_strength(mu, nu);
            for b in 0..2 {
                let mut ss = Gq::zero();
                for ad in 0..2 {
                    ss += &(&sigma(mu, a, ad) * &sigmabar(nu, ad, b));
                }
                if !ss.is_zero() {
                    fpart = fpart.add(&theta_dn(b).mul(&fmn).scale(&c(ss)));
                }
            }
        }
    }
    w = w.add(&fpart.scale(&Coeff::from(Gq::from_ratio(-1, 2) * Gq::i())));
    let mut top = SuperExpr::zero();
    for mu in 0..4 {
        for ad in 0..2 {
            let s = sigma(mu, a, ad);
            if !s.is_zero() {
                top = top.add(&spinor_up(LambdaBar, ad).partial(mu).scale(&c(s)));
            }
        }
    }
    shift_y(&w.add(&theta_sq().mul(&top)), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::expr::Measure;

    fn test_exprs() -> Vec<SuperExpr> {
        vec![
            expand_superfield(SuperfieldKind::VectorWz),
            scalar_field(FieldKind::Phi).mul(&theta_up(0)).mul(&thetabar_up(1)),
            expand_superfield(SuperfieldKind::Chiral),
        ]
    }

    #[test]
    fn sigmabar_is_minus_pauli() {
        assert_eq!(sigmabar(0, 0, 0), Gq::from_i64(-1));
        assert_eq!(sigmabar(3, 0, 0), Gq::from_i64(-1));
        assert_eq!(sigmabar(2, 0, 1), Gq::i());
    }

    #[test]
    fn chirality() {
        let phi = expand_superfield(SuperfieldKind::Chiral);
        let phibar = expand_superfield(SuperfieldKind::Antichiral);
        for k in 0..2 {
            assert!(dbar(k, &phi).is_zero());
            assert!(d(k, &phibar).is_zero());
        }
    }

    #[test]
    fn antichiral_is_conjugate() {
        assert_eq!(expand_superfield(SuperfieldKind::Chiral).conj(), expand_superfield(SuperfieldKind::Antichiral));
    }

    #[test]
    fn vector_is_real() {
        let v = expand_superfield(SuperfieldKind::VectorWz);
        assert_eq!(v.conj(), v);
        let top = v.berezin(Measure::D4Theta);
        assert_eq!(top, scalar_field(FieldKind::D).scale(&Coeff::ratio(1, 2)));
    }

    #[test]
    fn chiral_lowest_and_shift_components() {
        let phi = expand_superfield(SuperfieldKind::Chiral);
        assert_eq!(phi.component(0), scalar_field(FieldKind::Phi));
        // ¼θθθ̄θ̄□φ with θθθ̄θ̄ = −4θ¹θ²θ̄¹θ̄²
        let mut box_phi = SuperExpr::zero();
        for mu in 0..4 {
            box_phi = box_phi.add(&scalar_field(FieldKind::Phi).partial(mu).partial(mu).scale(&Coeff::from(eta(mu))));
        }
        assert_eq!(phi.component(0b1111), box_phi.scale(&Coeff::from(-1)));
    }

    #[test]
    fn same_chirality_anticommutators_vanish() {
        for e in test_exprs() {
            assert!(d(0, &d(1, &e)).add(&d(1, &d(0, &e))).is_zero());
            assert!(dbar(0, &dbar(1, &e)).add(&dbar(1, &dbar(0, &e))).is_zero());
        }
    }

    #[test]
    fn mixed_anticommutator_is_momentum() {
        for e in test_exprs() {
            for a in 0..2 {
                for ad in 0..2 {
                    let lhs = d(a, &dbar(ad, &e)).add(&dbar(ad, &d(a, &e)));
                    let mut rhs = SuperExpr::zero();
                    for mu in 0..4 {
                        rhs = rhs.add(&e.partial(mu).scale(&Coeff::from(&Gq::from_i64(-2) * &(&Gq::i() * &sigma(mu, a, ad)))));
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn field_strength_matches_expected_form() {
        for a in 0..2 {
            let w = field_strength_superfield(a);
            assert_eq!(w, expected_field_strength(a));
            for ad in 0..2 {
                assert!(dbar(ad, &w).is_zero());
            }
        }
    }

    #[test]
    fn berezin_agrees_with_coordinate_derivatives() {
        for e in test_exprs() {
            let via_d = e.d_coord(1).d_coord(0).scale(&Coeff::ratio(1, 2));
            let via_b = e.berezin(Measure::D2Theta);
            assert_eq!(via_d, via_b);
        }
    }
}
