//! Büchi automata over digit-tuple alphabets.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::graph;
use crate::lasso::LassoWord;

pub type State = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: State,
    pub letter: Letter,
    pub to: State,
}

/// A nondeterministic Büchi automaton with possibly several initial states.
///
/// Transitions are kept sorted and deduplicated, so structurally equal
/// automata compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchiAutomaton {
    alphabet: Alphabet,
    states: usize,
    initial: BTreeSet<State>,
    accepting: BTreeSet<State>,
    transitions: Vec<Transition>,
}

impl BuchiAutomaton {
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        initial: impl IntoIterator<Item = State>,
        accepting: impl IntoIterator<Item = State>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::domain("an automaton needs at least one state"));
        }
        let initial: BTreeSet<State> = initial.into_iter().collect();
        let accepting: BTreeSet<State> = accepting.into_iter().collect();
        if initial.is_empty() {
            return Err(Error::domain("no initial state"));
        }
        if let Some(&q) = initial
            .iter()
            .chain(accepting.iter())
            .find(|&&q| q >= states)
        {
            return Err(Error::domain(alloc::format!("state {q} out of range")));
        }
        let mut set = BTreeSet::new();
        for t in transitions {
            if t.from >= states || t.to >= states {
                return Err(Error::domain(alloc::format!(
                    "transition {} -> {} references a missing state",
                    t.from,
                    t.to
                )));
            }
            if !alphabet.contains(t.letter) {
                return Err(Error::domain("transition label outside the alphabet"));
            }
            set.insert(t);
        }
        Ok(BuchiAutomaton {
            alphabet,
            states,
            initial,
            accepting,
            transitions: set.into_iter().collect(),
        })
    }

    /// Convenience constructor from `(from, digits, to)` triples.
    pub fn from_digits(
        base: u32,
        arity: usize,
        states: usize,
        initial: &[State],
        accepting: &[State],
        transitions: &[(State, &[u32], State)],
    ) -> Result<Self> {
        let alphabet = Alphabet::new(base, arity)?;
        let ts = transitions
            .iter()
            .map(|&(from, digits, to)| {
                Ok(Transition {
                    from,
                    letter: alphabet.encode(digits)?,
                    to,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            alphabet,
            states,
            initial.iter().copied(),
            accepting.iter().copied(),
            ts,
        )
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn base(&self) -> u32 {
        self.alphabet.base()
    }

    pub fn arity(&self) -> usize {
        self.alphabet.arity()
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> &BTreeSet<State> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<State> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting.contains(&q)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Labelled successor lists, sorted by `(letter, target)`.
    pub fn successors(&self) -> Vec<Vec<(Letter, State)>> {
        let mut succ = vec![Vec::new(); self.states];
        for t in &self.transitions {
            succ[t.from].push((t.letter, t.to));
        }
        succ
    }

    /// Unlabelled adjacency lists (targets deduplicated).
    pub fn adjacency(&self) -> Vec<Vec<State>> {
        let mut adj = vec![Vec::new(); self.states];
        for t in &self.transitions {
            if adj[t.from].last() != Some(&t.to) && !adj[t.from].contains(&t.to) {
                adj[t.from].push(t.to);
            }
        }
        adj
    }

    pub fn sccs(&self) -> graph::Sccs {
        graph::tarjan(&self.adjacency())
    }

    /// Keeps the states in `keep`, renumbering them in ascending order.
    /// Returns `None` when no initial state survives.
    pub(crate) fn restrict(&self, keep: &[bool]) -> Option<BuchiAutomaton> {
        let mut index = vec![usize::MAX; self.states];
        let mut n = 0;
        for q in 0..self.states {
            if keep[q] {
                index[q] = n;
                n += 1;
            }
        }
        let initial: BTreeSet<State> = self
            .initial
            .iter()
            .filter(|&&q| keep[q])
            .map(|&q| index[q])
            .collect();
        if initial.is_empty() {
            return None;
        }
        let accepting = self
            .accepting
            .iter()
            .filter(|&&q| keep[q])
            .map(|&q| index[q])
            .collect();
        let transitions = self
            .transitions
            .iter()
            .filter(|t| keep[t.from] && keep[t.to])
            .map(|t| Transition {
                from: index[t.from],
                letter: t.letter,
                to: index[t.to],
            })
            .collect();
        Some(BuchiAutomaton {
            alphabet: self.alphabet,
            states: n,
            initial,
            accepting,
            transitions,
        })
    }

    /// States usable by some accepting run: reachable from an initial state and
    /// able to reach an accepting state that lies on a cycle.
    fn useful_states(&self) -> Vec<bool> {
        let adj = self.adjacency();
        let reach = graph::reachable(&adj, self.initial.iter().copied());
        let sccs = graph::tarjan(&adj);
        let good_accepting = self
            .accepting
            .iter()
            .copied()
            .filter(|&q| sccs.is_cyclic_node(q));
        let coreach = graph::reachable(&graph::reverse(&adj), good_accepting);
        reach.iter().zip(&coreach).map(|(&a, &b)| a && b).collect()
    }

    /// Removes every state that cannot take part in an accepting run.
    pub fn trim(&self) -> Result<BuchiAutomaton> {
        let keep = self.useful_states();
        self.restrict(&keep).ok_or(Error::EmptyLanguage)
    }

    pub fn is_trim(&self) -> bool {
        self.useful_states().iter().all(|&k| k)
    }

    /// Every state accepting: recognizes the topological closure of a trim
    /// automaton's language.
    pub fn close(&self) -> Result<BuchiAutomaton> {
        if !self.is_trim() {
            return Err(Error::NotTrim);
        }
        let mut out = self.clone();
        out.accepting = (0..self.states).collect();
        Ok(out)
    }

    pub fn is_closed(&self) -> bool {
        self.accepting.len() == self.states
    }

    /// Replaces the accepting set (used by the Cantor-set extraction).
    pub(crate) fn with_accepting(&self, accepting: BTreeSet<State>) -> BuchiAutomaton {
        let mut out = self.clone();
        out.accepting = accepting;
        out
    }

    /// Same transitions, different initial states.
    pub(crate) fn with_initial(&self, initial: BTreeSet<State>) -> BuchiAutomaton {
        let mut out = self.clone();
        out.initial = initial;
        out
    }

    /// Intersection via the three-track product. Only states reachable from
    /// the initial pairs are built; the result is not trimmed.
    pub fn product(&self, other: &BuchiAutomaton) -> Result<BuchiAutomaton> {
        if self.base() != other.base() {
            return Err(Error::BaseMismatch {
                left: self.base(),
                right: other.base(),
            });
        }
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        let sa = self.successors();
        let sb = other.successors();
        type Node = (State, State, u8);
        let mut ids: BTreeMap<Node, State> = BTreeMap::new();
        let mut queue: VecDeque<Node> = VecDeque::new();
        let mut initial = Vec::new();
        for &p in &self.initial {
            for &q in &other.initial {
                let node = (p, q, 0u8);
                let id = ids.len();
                ids.insert(node, id);
                queue.push_back(node);
                initial.push(id);
            }
        }
        let mut transitions = Vec::new();
        while let Some(node @ (p, q, track)) = queue.pop_front() {
            let from = ids[&node];
            // Track 0 waits for an accepting state of `self`, track 1 for one of
            // `other`; track 2 marks a completed round and is the accepting track.
            for &(x, p2) in &sa[p] {
                for &(y, q2) in &sb[q] {
                    if x != y {
                        continue;
                    }
                    let mut next = if track == 2 { 0 } else { track };
                    if next == 0 && self.is_accepting(p2) {
                        next = 1;
                    }
                    if next == 1 && other.is_accepting(q2) {
                        next = 2;
                    }
                    let target = (p2, q2, next);
                    let to = match ids.get(&target) {
                        Some(&id) => id,
                        None => {
                            let id = ids.len();
                            ids.insert(target, id);
                            queue.push_back(target);
                            id
                        }
                    };
                    transitions.push(Transition {
                        from,
                        letter: x,
                        to,
                    });
                }
            }
        }
        let accepting = ids
            .iter()
            .filter(|((_, _, t), _)| *t == 2)
            .map(|(_, &id)| id);
        BuchiAutomaton::new(self.alphabet, ids.len(), initial, accepting, transitions)
    }

    /// Disjoint union; recognizes the union of the languages.
    pub fn union(&self, other: &BuchiAutomaton) -> Result<BuchiAutomaton> {
        if self.alphabet != other.alphabet {
            return Err(Error::BaseMismatch {
                left: self.base(),
                right: other.base(),
            });
        }
        let off = self.states;
        let shift = |t: &Transition| Transition {
            from: t.from + off,
            letter: t.letter,
            to: t.to + off,
        };
        BuchiAutomaton::new(
            self.alphabet,
            self.states + other.states,
            self.initial
                .iter()
                .copied()
                .chain(other.initial.iter().map(|q| q + off)),
            self.accepting
                .iter()
                .copied()
                .chain(other.accepting.iter().map(|q| q + off)),
            self.transitions
                .iter()
                .copied()
                .chain(other.transitions.iter().map(shift)),
        )
    }

    /// Projection onto coordinate `i` (1-based).
    pub fn project(&self, i: usize) -> Result<BuchiAutomaton> {
        if i == 0 || i > self.arity() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        let target = Alphabet::new(self.base(), 1)?;
        let transitions = self.transitions.iter().map(|t| Transition {
            from: t.from,
            letter: Letter(self.alphabet.digit(t.letter, i - 1)),
            to: t.to,
        });
        BuchiAutomaton::new(
            target,
            self.states,
            self.initial.iter().copied(),
            self.accepting.iter().copied(),
            transitions,
        )
    }

    /// Exact Büchi acceptance of `spoke · cycle^ω`.
    ///
    /// Searches the product of the automaton with the lasso's positions for a
    /// reachable accepting node lying on a cycle within the cycle part.
    pub fn accepts_lasso(&self, w: &LassoWord) -> Result<bool> {
        if let Some(l) = w
            .spoke
            .iter()
            .chain(&w.cycle)
            .find(|l| !self.alphabet.contains(**l))
        {
            return Err(Error::domain(alloc::format!(
                "letter {} outside the alphabet",
                l.0
            )));
        }
        let s = w.spoke.len();
        let len = s + w.cycle.len();
        let succ = self.successors();
        let next_pos = |p: usize| if p + 1 == len { s } else { p + 1 };
        let node = |q: State, p: usize| q * len + p;
        let total = self.states * len;
        let mut adj = vec![Vec::new(); total];
        for q in 0..self.states {
            for p in 0..len {
                let letter = w.at(p);
                // successors are sorted by letter
                let lo = succ[q].partition_point(|&(l, _)| l < letter);
                for &(l, q2) in &succ[q][lo..] {
                    if l != letter {
                        break;
                    }
                    adj[node(q, p)].push(node(q2, next_pos(p)));
                }
            }
        }
        let reach = graph::reachable(&adj, self.initial.iter().map(|&q| node(q, 0)));
        let sccs = graph::tarjan(&adj);
        Ok((0..self.states).any(|q| {
            self.is_accepting(q)
                && (s..len).any(|p| {
                    let v = node(q, p);
                    reach[v] && sccs.is_cyclic_node(v)
                })
        }))
    }

    /// One step of the subset construction over finite words.
    pub(crate) fn subset_step(
        succ: &[Vec<(Letter, State)>],
        set: &[State],
    ) -> BTreeMap<Letter, Vec<State>> {
        let mut out: BTreeMap<Letter, BTreeSet<State>> = BTreeMap::new();
        for &q in set {
            for &(l, q2) in &succ[q] {
                out.entry(l).or_default().insert(q2);
            }
        }
        out.into_iter()
            .map(|(l, s)| (l, s.into_iter().collect()))
            .collect()
    }

    /// Distinct length-`n` prefixes of accepted words.
    pub fn prefix_count(&self, n: usize) -> Result<BigUint> {
        Ok(self
            .prefix_counts(n)?
            .pop()
            .expect("prefix_counts returns n + 1 entries"))
    }

    /// `prefix_count(k)` for every `k ≤ n`, from a single level-synchronized
    /// subset construction. Each distinct word reaches exactly one subset, so
    /// summing per-subset word counts counts words rather than paths.
    pub fn prefix_counts(&self, n: usize) -> Result<Vec<BigUint>> {
        if !self.is_trim() {
            return Err(Error::NotTrim);
        }
        let succ = self.successors();
        let start: Vec<State> = self.initial.iter().copied().collect();
        let mut level: BTreeMap<Vec<State>, BigUint> = BTreeMap::new();
        level.insert(start, BigUint::from(1u32));
        let mut counts = Vec::with_capacity(n + 1);
        counts.push(BigUint::from(1u32));
        for _ in 0..n {
            let mut next: BTreeMap<Vec<State>, BigUint> = BTreeMap::new();
            for (set, c) in &level {
                for (_, target) in Self::subset_step(&succ, set) {
                    *next.entry(target).or_insert_with(BigUint::zero) += c;
                }
            }
            counts.push(next.values().sum());
            level = next;
        }
        Ok(counts)
    }
}
