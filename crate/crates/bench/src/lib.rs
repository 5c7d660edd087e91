//! Shared fixtures for the engine benchmarks.

use qsusy_core::{AlgebraConfig, AlgebraElement, Generator, Rep, StructureMaps};

pub fn maps() -> StructureMaps {
    StructureMaps::new(AlgebraConfig::default()).expect("default configuration is valid")
}

pub fn spin(two_j: u32) -> Rep {
    Rep::spin(two_j, &AlgebraConfig::default()).expect("spin representations exist for every 2j > 0")
}

/// `E^n F^n`, whose normal form exercises every `U_q(sl2)` rewrite rule.
pub fn ladder_word(n: usize) -> AlgebraElement {
    let mut w = vec![Generator::E; n];
    w.extend(std::iter::repeat_n(Generator::F, n));
    AlgebraElement::from_word(w)
}
