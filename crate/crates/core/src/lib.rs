//! Exact symbolic verification engine for semi-Hopf supersymmetry algebras.
//!
//! The coefficient field is [`Scalar`]: rational functions in `s` (`s² = q`)
//! over the Gaussian rationals. On top of it sit the graded algebra with PBW
//! normal forms ([`algebra`]), its coproduct, antipode and counit ([`hopf`]),
//! the supersymmetry bracket table ([`susy`]), concrete U_q(sl2) machinery
//! ([`uq`]) and N=1 superspace ([`superspace`]).

pub mod algebra;
pub mod error;
pub mod hopf;
pub mod scalar;
pub mod superspace;
pub mod susy;
pub mod uq;

pub use algebra::{AlgebraConfig, AlgebraElement, Generator, RewriteSystem, Word};
pub use error::{Error, Result};
pub use hopf::{SemiHopfClass, StructureMaps, TensorElement};
pub use scalar::{Gq, Scalar};
pub use superspace::SuperExpr;
pub use susy::{BasisSymbol, BracketTable, LinComb, Side};
pub use uq::{Matrix, QuantumLieBasis, QuantumMetric, Rep};
