//! N=1 superspace: Grassmann calculus, superfields, supercovariant
//! derivatives, Berezin integration and component Lagrangians.

pub mod calculus;
mod coeff;
mod expr;
mod field;
mod lagrangian;

pub use calculus::SuperfieldKind;
pub use coeff::Coeff;
pub use expr::{Measure, Monomial, SuperExpr};
pub use field::{FieldFactor, FieldKind};
pub use lagrangian::{equal_mod_ibp, ibp_canonical, verify_sym_abelian, verify_wz_lagrangian, IbpOutcome, LagrangianParams, SymReport, WzReport};
