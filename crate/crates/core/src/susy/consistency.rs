use super::basis::{BasisSymbol, LinComb};
use super::table::BracketTable;
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::hopf::StructureMaps;

#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyOutcome {
    pub pair: (BasisSymbol, BasisSymbol),
    pub adjoint: AlgebraElement,
    pub bracket: AlgebraElement,
}

impl ConsistencyOutcome {
    pub fn passed(&self) -> bool {
        self.adjoint == self.bracket
    }

    pub fn witness(&self) -> Option<String> {
        if self.passed() {
            None
        } else {
            Some(format!("ad = {}, bracket = {}", self.adjoint, self.bracket))
        }
    }
}

/// Image of a basis symbol in the algebra. `T(a)` needs the quantum Lie basis.
pub fn realize(x: BasisSymbol, t_basis: Option<&[AlgebraElement]>) -> Result<AlgebraElement> {
    match x {
        BasisSymbol::T(a) => t_basis
            .and_then(|b| b.get(a as usize - 1))
            .cloned()
            .ok_or_else(|| Error::RealizationUnavailable(x.to_string())),
        _ => Ok(AlgebraElement::generator(x.to_generator().unwrap())),
    }
}

fn realize_lin(l: &LinComb, t_basis: Option<&[AlgebraElement]>) -> Result<AlgebraElement> {
    let mut r = AlgebraElement::zero();
    for (x, c) in l.iter() {
        r = r.add(&realize(*x, t_basis)?.scale(c));
    }
    Ok(r)
}

/// Compares the reduced adjoint action with the table bracket under the same realization.
pub fn bracket_adjoint_consistency(
    maps: &StructureMaps,
    table: &BracketTable,
    t_basis: Option<&[AlgebraElement]>,
    x: BasisSymbol,
    y: BasisSymbol,
) -> Result<ConsistencyOutcome> {
    let rx = realize(x, t_basis)?;
    let ry = realize(y, t_basis)?;
    let adjoint = maps.rs().normal_form(&maps.adjoint_action(&rx, &ry)?)?;
    let bracket = maps.rs().normal_form(&realize_lin(&table.bracket(x, y)?, t_basis)?)?;
    Ok(ConsistencyOutcome { pair: (x, y), adjoint, bracket })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraConfig;
    use BasisSymbol::*;

    #[test]
    fn classical_pairs_agree() {
        let maps = StructureMaps::new(AlgebraConfig::default()).unwrap();
        let table = maps.rs().table().clone();
        for (x, y) in [(Q(1, 1), Q(1, 1)), (P(0), J(0, 1)), (Q(1, 1), Qbar(1, 1)), (Q(2, 1), J(1, 2)), (Qbar(1, 2), J(0, 3))] {
            let o = bracket_adjoint_consistency(&maps, &table, None, x, y).unwrap();
            assert!(o.passed(), "{x} {y}: {:?}", o.witness());
        }
    }

    #[test]
    fn quantum_symbol_needs_basis() {
        let maps = StructureMaps::new(AlgebraConfig::default()).unwrap();
        let table = maps.rs().table().clone();
        assert!(bracket_adjoint_consistency(&maps, &table, None, T(1), P(0)).is_err());
    }
}
