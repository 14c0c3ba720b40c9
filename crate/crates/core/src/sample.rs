//! Seeded random automata and lasso words for property checks.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, Letter};
use crate::automaton::{BuchiAutomaton, State, Transition};
use crate::lasso::LassoWord;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random automaton on `states` states where every (state, letter, state)
/// triple is a transition with probability `density`. It need not be trim.
pub fn random_automaton(
    rng: &mut SampleRng,
    alphabet: Alphabet,
    states: usize,
    density: f64,
) -> BuchiAutomaton {
    let mut transitions = Vec::new();
    for from in 0..states {
        for letter in alphabet.letters() {
            for to in 0..states {
                if rng.gen_bool(density) {
                    transitions.push(Transition { from, letter, to });
                }
            }
        }
    }
    let accepting: BTreeSet<State> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    BuchiAutomaton::new(
        alphabet,
        states,
        BTreeSet::from([0]),
        accepting,
        transitions,
    )
    .expect("generated automaton is well formed")
}

/// Draws random automata until one has a nonempty language, and returns it
/// trimmed.
pub fn random_trim_automaton(
    rng: &mut SampleRng,
    alphabet: Alphabet,
    states: usize,
    density: f64,
) -> BuchiAutomaton {
    loop {
        if let Ok(a) = random_automaton(rng, alphabet, states, density).trim() {
            return a;
        }
    }
}

pub fn random_word(rng: &mut SampleRng, alphabet: Alphabet, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| Letter(rng.gen_range(0..alphabet.size())))
        .collect()
}

/// A uniformly shaped random lasso with spoke and cycle lengths up to the
/// given bounds.
pub fn random_lasso(
    rng: &mut SampleRng,
    alphabet: Alphabet,
    max_spoke: usize,
    max_cycle: usize,
) -> LassoWord {
    let s = rng.gen_range(0..=max_spoke);
    let c = rng.gen_range(1..=max_cycle.max(1));
    LassoWord::new(random_word(rng, alphabet, s), random_word(rng, alphabet, c))
}

/// Shortest labelled path from `from` to `to` through states allowed by
/// `keep`, if any.
fn shortest_path(
    succ: &[Vec<(Letter, State)>],
    from: State,
    to: State,
    keep: impl Fn(State) -> bool,
) -> Option<Vec<Letter>> {
    let mut parent: Vec<Option<(State, Letter)>> = vec![None; succ.len()];
    let mut seen = vec![false; succ.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut word = Vec::new();
            let mut v = to;
            while v != from {
                let (p, l) = parent[v].expect("visited");
                word.push(l);
                v = p;
            }
            word.reverse();
            return Some(word);
        }
        for &(l, y) in &succ[x] {
            if !seen[y] && keep(y) {
                seen[y] = true;
                parent[y] = Some((x, l));
                queue.push_back(y);
            }
        }
    }
    None
}

/// A random lasso accepted by the trim automaton `a`: a random walk, a path
/// to an accepting state on a cycle, and a random loop through it.
pub fn accepted_lasso(rng: &mut SampleRng, a: &BuchiAutomaton, max_walk: usize) -> LassoWord {
    let succ = a.successors();
    let sccs = a.sccs();
    let initial: Vec<State> = a.initial().iter().copied().collect();
    let mut q = *initial.choose(rng).expect("initial states are nonempty");
    let mut spoke = Vec::new();
    for _ in 0..rng.gen_range(0..=max_walk) {
        let &(l, next) = succ[q].choose(rng).expect("trim states have successors");
        spoke.push(l);
        q = next;
    }
    // move on to an accepting state on a cycle
    let targets: Vec<State> = a
        .accepting()
        .iter()
        .copied()
        .filter(|&p| sccs.is_cyclic_node(p))
        .filter(|&p| shortest_path(&succ, q, p, |_| true).is_some())
        .collect();
    let p = *targets
        .choose(rng)
        .expect("trim states reach an accepting cycle");
    spoke.extend(shortest_path(&succ, q, p, |_| true).expect("reachable"));
    // random loop inside the component of p
    let inside = |x: State| sccs.same(x, p);
    let mut cycle = Vec::new();
    let mut x = p;
    for _ in 0..rng.gen_range(0..=max_walk) {
        let options: Vec<&(Letter, State)> = succ[x].iter().filter(|(_, y)| inside(*y)).collect();
        let &&(l, y) = options.choose(rng).expect("cyclic component");
        cycle.push(l);
        x = y;
    }
    if x == p && !cycle.is_empty() {
        return LassoWord::new(spoke, cycle);
    }
    let back: Vec<Letter> = if x == p {
        // an empty walk: take any edge inside, then come back
        let options: Vec<&(Letter, State)> = succ[p].iter().filter(|(_, y)| inside(*y)).collect();
        let &&(l, y) = options.choose(rng).expect("cyclic component");
        cycle.push(l);
        shortest_path(&succ, y, p, inside).expect("strongly connected")
    } else {
        shortest_path(&succ, x, p, inside).expect("strongly connected")
    };
    cycle.extend(back);
    LassoWord::new(spoke, cycle)
}
