//! Structure maps Δ, S, ε, axiom checkers and the adjoint action.

mod axioms;
mod maps;
mod tensor;

pub use axioms::{BialgebraReport, SemiHopfClass, SemiHopfReport};
pub use maps::StructureMaps;
pub use tensor::TensorElement;
