//! Fixtures shared by the benchmarks.

use weylcert_core::nilpotent::{levi_decompositions, LeviDecomposition};
use weylcert_core::{Family, Partition, WeylGroup, DEFAULT_GUARD};

pub fn group(family: Family, rank: usize) -> WeylGroup {
    WeylGroup::of_type(family, rank, DEFAULT_GUARD).expect("benchmark groups fit the guard")
}

/// The first decomposition of the given Jordan type.
pub fn decomposition(family: Family, rank: usize, parts: &[usize]) -> LeviDecomposition {
    let jt = Partition::new(parts.to_vec()).expect("valid partition");
    levi_decompositions(family, &jt, rank)
        .expect("valid Jordan type")
        .into_iter()
        .next()
        .expect("at least one decomposition")
}
