//! Two-component spinor matrices used by the bracket table.
//!
//! `σ^0` is the identity and `σ^i` are the Pauli matrices; `η = diag(−1, 1, 1, 1)`;
//! `ε^{12} = 1`. The bar matrices are `σ̄^μ = ε (σ^μ)ᵀ εᵀ`.

use crate::scalar::Gq;

pub type M2 = [[Gq; 2]; 2];

fn m2(v: [[(i64, i64); 2]; 2]) -> M2 {
    let e = |(re, im): (i64, i64)| &Gq::from_i64(re) + &(&Gq::i() * &Gq::from_i64(im));
    [[e(v[0][0]), e(v[0][1])], [e(v[1][0]), e(v[1][1])]]
}

pub fn eta(m: usize) -> i64 {
    if m == 0 {
        -1
    } else {
        1
    }
}

/// `ε^{αβ}` with `ε^{12} = 1` (0-based indices).
pub fn eps_up(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

pub fn sigma_up(m: usize) -> M2 {
    match m {
        0 => m2([[(1, 0), (0, 0)], [(0, 0), (1, 0)]]),
        1 => m2([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        2 => m2([[(0, 0), (0, -1)], [(0, 1), (0, 0)]]),
        3 => m2([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
        _ => panic!("Lorentz index {m} out of range"),
    }
}

pub fn mul(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn sub(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| &a[i][j] - &b[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn scale(a: &M2, c: &Gq) -> M2 {
    let e = |i: usize, j: usize| &a[i][j] * c;
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn transpose(a: &M2) -> M2 {
    [[a[0][0].clone(), a[1][0].clone()], [a[0][1].clone(), a[1][1].clone()]]
}

fn eps_matrix() -> M2 {
    m2([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]])
}

pub fn sigmabar_up(m: usize) -> M2 {
    let e = eps_matrix();
    mul(&mul(&e, &transpose(&sigma_up(m))), &transpose(&e))
}

pub fn sigma_low(m: usize) -> M2 {
    scale(&sigma_up(m), &Gq::from_i64(eta(m)))
}

pub fn sigmabar_low(m: usize) -> M2 {
    scale(&sigmabar_up(m), &Gq::from_i64(eta(m)))
}

/// Spinor matrix of `J_{μν}` acting on `Q`: `[Q_α, J_{μν}] = b_{μν}{}_α{}^β Q_β`,
/// with `b_{μν} = −¼(σ_μ σ̄_ν − σ_ν σ̄_μ)`.
pub fn b_matrix(m: usize, n: usize) -> M2 {
    let x = sub(&mul(&sigma_low(m), &sigmabar_low(n)), &mul(&sigma_low(n), &sigmabar_low(m)));
    scale(&x, &Gq::from_ratio(-1, 4))
}

/// Matrix acting on `Q̄`: `[Q̄_α̇, J_{μν}] = b̄_{μν}{}_α̇{}^β̇ Q̄_β̇`,
/// with `b̄_{μν} = (¼(σ̄_μ σ_ν − σ̄_ν σ_μ))ᵀ`.
pub fn bbar_matrix(m: usize, n: usize) -> M2 {
    let x = sub(&mul(&sigmabar_low(m), &sigma_low(n)), &mul(&sigmabar_low(n), &sigma_low(m)));
    transpose(&scale(&x, &Gq::from_ratio(1, 4)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commutator(a: &M2, b: &M2) -> M2 {
        sub(&mul(a, b), &mul(b, a))
    }

    #[test]
    fn sigmabar_spatial_flips_sign() {
        assert_eq!(sigmabar_up(0), sigma_up(0));
        for i in 1..4 {
            assert_eq!(sigmabar_up(i), scale(&sigma_up(i), &Gq::from_i64(-1)));
        }
    }

    #[test]
    fn b_matrices_are_traceless_and_antisymmetric() {
        for m in 0..4 {
            for n in 0..4 {
                let b = b_matrix(m, n);
                assert!((&b[0][0] + &b[1][1]).is_zero());
                let bt = b_matrix(n, m);
                assert_eq!(b, scale(&bt, &Gq::from_i64(-1)));
            }
        }
    }

    #[test]
    fn b_matrices_close_on_lorentz_algebra() {
        // [b_{01}, b_{02}] is proportional to b_{12}
        let c = commutator(&b_matrix(0, 1), &b_matrix(0, 2));
        let b12 = b_matrix(1, 2);
        let ratio = &c[0][0] / &b12[0][0];
        assert_eq!(c, scale(&b12, &ratio));
    }
}
