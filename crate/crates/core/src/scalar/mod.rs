//! Exact coefficient field: rational functions in `s` (with `s² = q`) over Q(i).

mod gauss;
mod poly;
mod rational_fn;

pub use gauss::Gq;
pub use poly::Poly;
pub use rational_fn::{Scalar, ScalarRepr};
