//! General supersymmetry algebra: bracket table, Jacobi checks and the
//! comparison with the adjoint action.

mod basis;
mod consistency;
mod jacobi;
pub mod spinor;
mod table;

pub use basis::{BasisSymbol, LinComb};
pub use consistency::{bracket_adjoint_consistency, realize, ConsistencyOutcome};
pub use jacobi::{jacobi_check, jacobi_sweep, JacobiOutcome, JacobiSweep, Side};
pub use table::BracketTable;
