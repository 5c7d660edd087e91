//! Graded generator alphabet, algebra elements and PBW normal forms.

pub(crate) mod element;
mod generator;
mod rewrite;

pub use element::AlgebraElement;
pub use generator::{word_parity, word_to_string, Generator, Sector, Word};
pub use rewrite::{AlgebraConfig, RewriteSystem, RuleRhs};
