use super::basis::{BasisSymbol, LinComb};
use super::table::BracketTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiOutcome {
    pub triple: (BasisSymbol, BasisSymbol, BasisSymbol),
    pub side: Side,
    /// Nonzero defect on failure.
    pub witness: Option<LinComb>,
}

impl JacobiOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// `(−1)^{|x||y|}`
fn koszul(x: BasisSymbol, y: BasisSymbol) -> i64 {
    if x.parity() < 0 && y.parity() < 0 {
        -1
    } else {
        1
    }
}

fn sym(x: BasisSymbol) -> LinComb {
    LinComb::single(x, Scalar::one())
}

/// Graded Jacobi identity on a classical triple.
///
/// Left: `[[x,y],z] = [x,[y,z]] − (−1)^{|x||y|}[y,[x,z]]`.
/// Right: `[[x,y],z] = [x,[y,z]] + (−1)^{|y||z|}[[x,z],y]`.
pub fn jacobi_check(
    t: &BracketTable,
    x: BasisSymbol,
    y: BasisSymbol,
    z: BasisSymbol,
    side: Side,
) -> Result<JacobiOutcome> {
    for s in [x, y, z] {
        if s.is_quantum() {
            return Err(Error::UnsupportedTriple(format!("({x}, {y}, {z})")));
        }
        s.validate(t.n_susy())?;
    }
    let br = |a: &LinComb, b: &LinComb| t.bracket_lin(a, b);
    let (sx, sy, sz) = (sym(x), sym(y), sym(z));
    let mut defect = LinComb::zero();
    match side {
        Side::Left => {
            let sign = koszul(x, y);
            defect.add_scaled(&br(&br(&sx, &sy), &sz), &Scalar::one());
            defect.add_scaled(&br(&sx, &br(&sy, &sz)), &Scalar::from_i64(-1));
            defect.add_scaled(&br(&sy, &br(&sx, &sz)), &Scalar::from_i64(sign));
        }
        Side::Right => {
            let sign = koszul(y, z);
            defect.add_scaled(&br(&br(&sx, &sy), &sz), &Scalar::one());
            defect.add_scaled(&br(&sx, &br(&sy, &sz)), &Scalar::from_i64(-1));
            defect.add_scaled(&br(&br(&sx, &sz), &sy), &Scalar::from_i64(-sign));
        }
    }
    Ok(JacobiOutcome {
        triple: (x, y, z),
        side,
        witness: if defect.is_zero() { None } else { Some(defect) },
    })
}

#[derive(Clone, Debug)]
pub struct JacobiSweep {
    pub triples: usize,
    pub checks: usize,
    pub failures: Vec<JacobiOutcome>,
}

/// Every ordered triple of classical symbols, both sides, in parallel.
/// Failures are returned in the deterministic enumeration order.
pub fn jacobi_sweep(t: &BracketTable) -> JacobiSweep {
    let syms = BasisSymbol::classical(t.n_susy());
    let n = syms.len();
    let triples: Vec<(BasisSymbol, BasisSymbol, BasisSymbol)> = (0..n * n * n)
        .map(|k| (syms[k / (n * n)], syms[(k / n) % n], syms[k % n]))
        .collect();
    let failures: Vec<JacobiOutcome> = triples
        .par_iter()
        .flat_map_iter(|&(x, y, z)| {
            [Side::Left, Side::Right]
                .into_iter()
                .map(move |side| jacobi_check(t, x, y, z, side).expect("classical triple"))
                .filter(|o| !o.passed())
        })
        .collect();
    JacobiSweep { triples: triples.len(), checks: 2 * triples.len(), failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisSymbol::*;

    #[test]
    fn examples_pass() {
        let t = BracketTable::new(2).unwrap();
        for triple in [(P(0), Q(1, 1), Qbar(1, 1)), (J(0, 1), Q(1, 1), Qbar(1, 1)), (J(0, 1), J(0, 2), J(1, 2))] {
            for side in [Side::Left, Side::Right] {
                assert!(jacobi_check(&t, triple.0, triple.1, triple.2, side).unwrap().passed());
            }
        }
    }

    #[test]
    fn quantum_symbols_are_rejected() {
        let t = BracketTable::new(2).unwrap();
        assert!(matches!(
            jacobi_check(&t, T(1), P(0), P(1), Side::Left),
            Err(Error::UnsupportedTriple(_))
        ));
    }

    #[test]
    fn full_sweep_n1() {
        let t = BracketTable::new(1).unwrap();
        let s = jacobi_sweep(&t);
        assert_eq!(s.triples, 14 * 14 * 14);
        assert!(s.failures.is_empty(), "{:?}", s.failures.first());
    }

    #[test]
    fn full_sweep_n2() {
        let t = BracketTable::new(2).unwrap();
        let s = jacobi_sweep(&t);
        assert_eq!(s.triples, 20 * 20 * 20);
        assert_eq!(s.checks, 2 * s.triples);
        assert!(s.failures.is_empty(), "{:?}", s.failures.first());
    }

    #[test]
    fn nonzero_c_breaks_jacobi() {
        let t = BracketTable::new(1).unwrap().with_c(crate::scalar::Gq::one());
        let s = jacobi_sweep(&t);
        assert!(!s.failures.is_empty());
    }
}
