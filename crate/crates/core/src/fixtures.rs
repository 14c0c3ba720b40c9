//! Small reference automata used throughout the tests and examples.

use crate::automaton::BuchiAutomaton;

/// Middle-thirds Cantor set: `(0|2)^ω` in base 3.
pub fn cantor() -> BuchiAutomaton {
    BuchiAutomaton::from_digits(3, 1, 1, &[0], &[0], &[(0, &[0], 0), (0, &[2], 0)])
        .expect("valid fixture")
}

/// `0*10^ω` in base 2, the set `{2^{-n-1} : n ≥ 0}`.
pub fn dyadic_points() -> BuchiAutomaton {
    BuchiAutomaton::from_digits(
        2,
        1,
        2,
        &[0],
        &[1],
        &[(0, &[0], 0), (0, &[1], 1), (1, &[0], 1)],
    )
    .expect("valid fixture")
}

/// `[r]^ω`, the whole unit interval.
pub fn full(base: u32) -> BuchiAutomaton {
    let digits: alloc::vec::Vec<[u32; 1]> = (0..base).map(|d| [d]).collect();
    let ts: alloc::vec::Vec<(usize, &[u32], usize)> =
        digits.iter().map(|d| (0, &d[..], 0)).collect();
    BuchiAutomaton::from_digits(base, 1, 1, &[0], &[0], &ts).expect("valid fixture")
}
