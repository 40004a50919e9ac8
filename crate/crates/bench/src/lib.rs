//! Seeded inputs shared by the benchmarks.

use scarf_core::ideals::minimize;
use scarf_core::sample::random_generic_antichain;
use scarf_core::{MonomialIdeal, PointSet};

/// Generic integer antichain of `count` points in dimension `n`.
pub fn generic_set(n: usize, count: usize) -> PointSet {
    random_generic_antichain(n, count, 0xBE7C + (n * 100 + count) as u64).expect("benchmark input")
}

/// Monomial ideal whose exponent vectors form a generic antichain.
pub fn generic_ideal(n: usize, count: usize) -> MonomialIdeal {
    let set = generic_set(n, count);
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let gens = set
        .points()
        .iter()
        .map(|p| p.coords().iter().map(|c| u64::try_from(c.as_integer().expect("integral")).expect("natural")).collect())
        .collect();
    minimize(&MonomialIdeal::new(vars, gens).expect("valid ideal"))
}
