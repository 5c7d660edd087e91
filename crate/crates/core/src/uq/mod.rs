//! Concrete U_q(sl2): representations, R-matrices, the quantum trace
//! element, metrics and the quantum Lie algebra inside U_q(sl2).

mod matrix;
mod metric;
mod qlie;
mod qtrace;
mod rep;
mod rmatrix;

pub use matrix::Matrix;
pub use rep::Rep;
pub use rmatrix::{check_intertwining, check_yang_baxter, eval_tensor, hecke_pattern, noncomm_factor, r_matrix, IntertwiningOutcome, RMatrix};

pub use qlie::{braided_jacobi, coproduct_shape, quantum_lie_basis, CoproductShape, QuantumLieBasis, LABELS};
pub use qtrace::{check_u_conjugation, quantum_trace_element};
pub use metric::{casimir_form_compare, CasimirComparison, QuantumMetric};
