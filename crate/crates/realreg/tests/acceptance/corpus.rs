//! The fixture corpus: hand-written automata plus seeded random ones.

use rand::Rng;
use realreg_core::sample;
use realreg_core::{parse_omega_regex, Alphabet, BuchiAutomaton};

pub const RANDOM_SEED: u64 = 20;
pub const RANDOM_COUNT: usize = 20;

pub struct Fixture {
    pub name: String,
    /// Trimmed.
    pub automaton: BuchiAutomaton,
}

const HAND: &[&str] = &[
    // sparse
    "base 2 arity 1: 0*1(0)^w",
    "base 2 arity 1: (00)*1(0)^w",
    "base 2 arity 1: 0*10*1(0)^w",
    "base 2 arity 1: (01)*(1)^w",
    "base 2 arity 1: (01)^w",
    "base 2 arity 1: 0(1)^w | 1(0)^w",
    "base 2 arity 1: (0)^w | (1)^w",
    "base 2 arity 1: 1(0)*1(0)^w",
    "base 2 arity 1: 0*1(0)^w | (0)^w",
    "base 3 arity 1: 0*2(0)^w",
    "base 3 arity 1: (012)*(0)^w",
    "base 3 arity 1: 0*1(0)^w",
    "base 3 arity 1: 2*(1)^w",
    "base 4 arity 1: 0*1(0)^w",
    "base 4 arity 1: 3*0(3)^w",
    "base 4 arity 1: (00)*2(0)^w",
    "base 4 arity 1: 0*10*1(0)^w",
    "base 2 arity 2: (0,0)*(1,1)(0,0)^w",
    "base 3 arity 2: (0,1)*(2,0)(0,0)^w",
    // not sparse
    "base 3 arity 1: (0|2)^w",
    "base 2 arity 1: (0|1)^w",
    "base 3 arity 1: (0|1|2)^w",
    "base 4 arity 1: (0|1|2|3)^w",
    "base 2 arity 1: (0|1)*1(0)^w",
    "base 2 arity 1: (0|10)^w",
    "base 4 arity 1: (0|3)^w",
    "base 2 arity 1: (01|10)^w",
    "base 3 arity 1: (0|1)^w",
    "base 4 arity 1: (0|12)^w",
];

type Edge = (usize, &'static [u32], usize);

/// Automata written out by hand where the regex compiler would exceed six
/// states: (name, base, states, initial, accepting, transitions).
const EXPLICIT: &[(&str, u32, usize, &[usize], &[usize], &[Edge])] = &[
    (
        "0*1(0)^w | 0*11(0)^w",
        2,
        3,
        &[0],
        &[2],
        &[
            (0, &[0], 0),
            (0, &[1], 1),
            (1, &[0], 2),
            (1, &[1], 2),
            (2, &[0], 2),
        ],
    ),
    (
        "0*10*10*1(0)^w",
        2,
        4,
        &[0],
        &[3],
        &[
            (0, &[0], 0),
            (0, &[1], 1),
            (1, &[0], 1),
            (1, &[1], 2),
            (2, &[0], 2),
            (2, &[1], 3),
            (3, &[0], 3),
        ],
    ),
    (
        "0*1(0)^w | 1(2)^w (base 3)",
        3,
        4,
        &[0, 2],
        &[1, 3],
        &[
            (0, &[0], 0),
            (0, &[1], 1),
            (1, &[0], 1),
            (2, &[1], 3),
            (3, &[2], 3),
        ],
    ),
    (
        MIXED,
        3,
        4,
        &[0, 1],
        &[0, 3],
        &[
            (0, &[0], 0),
            (0, &[2], 0),
            (1, &[1], 2),
            (2, &[0], 2),
            (2, &[2], 3),
            (3, &[0], 3),
        ],
    ),
    (
        "(00|11)*1(0)^w",
        2,
        4,
        &[0],
        &[3],
        &[
            (0, &[0], 1),
            (1, &[0], 0),
            (0, &[1], 2),
            (2, &[1], 0),
            (0, &[1], 3),
            (3, &[0], 3),
        ],
    ),
];

/// `(0|2)^ω ∪ 1·0*·2·0^ω` in base 3.
pub const MIXED: &str = "(0|2)^w | 10*20^w (base 3)";

pub fn from_regex(text: &str) -> BuchiAutomaton {
    parse_omega_regex(text)
        .and_then(|e| e.to_automaton())
        .and_then(|a| a.trim())
        .unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn corpus() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = HAND
        .iter()
        .map(|t| Fixture {
            name: t.to_string(),
            automaton: from_regex(t),
        })
        .collect();
    for (name, base, states, initial, accepting, edges) in EXPLICIT {
        let a = BuchiAutomaton::from_digits(*base, 1, *states, initial, accepting, edges)
            .and_then(|a| a.trim())
            .expect("valid fixture");
        out.push(Fixture {
            name: name.to_string(),
            automaton: a,
        });
    }
    let mut rng = sample::rng(RANDOM_SEED);
    for i in 0..RANDOM_COUNT {
        let base = rng.gen_range(2..=4);
        let states = rng.gen_range(2..=6);
        let density = rng.gen_range(0.08..0.3);
        let al = Alphabet::new(base, 1).expect("valid alphabet");
        out.push(Fixture {
            name: format!("random #{i} (base {base}, {states} states)"),
            automaton: sample::random_trim_automaton(&mut rng, al, states, density),
        });
    }
    out
}
