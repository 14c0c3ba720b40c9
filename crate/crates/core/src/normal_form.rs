//! Sparse normal forms: finite unions of chains `u_1 v_1* ... u_d v_d^ω`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::automaton::{BuchiAutomaton, State};
use crate::error::{Error, Result};
use crate::graph::{self, Sccs};
use crate::lasso::{power, primitive_root, LassoWord};
use crate::omega::OmegaRegex;
use crate::regex::Regex;

pub const DEFAULT_CHAIN_CAP: usize = 100_000;

/// `u_1 v_1* u_2 v_2* ... u_d v_d^ω`, stored as the pairs `(u_i, v_i)`; the
/// last pair carries the ω-power.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    parts: Vec<(Word, Word)>,
}

impl Chain {
    pub fn new(parts: Vec<(Word, Word)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a chain needs at least one part"));
        }
        if parts.iter().any(|(_, v)| v.is_empty()) {
            return Err(Error::domain("chain cycle words must be nonempty"));
        }
        Ok(Chain { parts })
    }

    pub fn parts(&self) -> &[(Word, Word)] {
        &self.parts
    }

    /// Number of parts `d`.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Number of starred segments, `d - 1`.
    pub fn simple_length(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn tail(&self) -> (&Word, &Word) {
        let (u, v) = self.parts.last().expect("chains are nonempty");
        (u, v)
    }

    /// The chain `u_1 v_1* ... u_j v_j^ω` (1 ≤ j ≤ d), with its tail in
    /// canonical lasso form.
    pub fn truncate(&self, j: usize) -> Chain {
        assert!(j >= 1 && j <= self.depth());
        let mut parts = self.parts[..j].to_vec();
        canonicalize_tail(&mut parts);
        Chain { parts }
    }

    pub fn regex_parts(&self) -> (Regex, Regex) {
        let (init, last) = self.parts.split_at(self.parts.len() - 1);
        let mut pieces = Vec::new();
        for (u, v) in init {
            pieces.push(Regex::word(u));
            pieces.push(Regex::star(Regex::word(v)));
        }
        pieces.push(Regex::word(&last[0].0));
        (Regex::concat_all(pieces), Regex::word(&last[0].1))
    }

    /// Words of the chain with every star exponent at most `max_star`.
    pub fn lassos(&self, max_star: usize) -> Vec<LassoWord> {
        let mut prefixes: Vec<Word> = vec![Vec::new()];
        let (init, last) = self.parts.split_at(self.parts.len() - 1);
        for (u, v) in init {
            let mut next = Vec::new();
            for p in &prefixes {
                for k in 0..=max_star {
                    let mut w = p.clone();
                    w.extend_from_slice(u);
                    w.extend(power(v, k));
                    next.push(w);
                }
            }
            prefixes = next;
        }
        let (u, v) = &last[0];
        prefixes
            .into_iter()
            .map(|mut p| {
                p.extend_from_slice(u);
                LassoWord::new(p, v.clone())
            })
            .collect()
    }
}

fn canonicalize_tail(parts: &mut [(Word, Word)]) {
    let last = parts.last_mut().expect("chains are nonempty");
    let c = LassoWord::new(last.0.clone(), last.1.clone()).canonical();
    *last = (c.spoke, c.cycle);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseNormalForm {
    pub alphabet: Alphabet,
    pub chains: Vec<Chain>,
}

impl SparseNormalForm {
    /// Sorts and deduplicates the chains.
    pub fn new(alphabet: Alphabet, chains: impl IntoIterator<Item = Chain>) -> Self {
        let set: BTreeSet<Chain> = chains.into_iter().collect();
        SparseNormalForm {
            alphabet,
            chains: set.into_iter().collect(),
        }
    }

    pub fn max_depth(&self) -> usize {
        self.chains.iter().map(Chain::depth).max().unwrap_or(0)
    }

    pub fn to_omega_regex(&self) -> Result<OmegaRegex> {
        OmegaRegex::new(
            self.alphabet,
            self.chains.iter().map(Chain::regex_parts).collect(),
        )
    }

    pub fn to_automaton(&self) -> Result<BuchiAutomaton> {
        self.to_omega_regex()?.to_automaton()
    }

    /// lcm of the lengths of all nonempty words occurring in the chains.
    pub fn word_length_lcm(&self) -> usize {
        self.chains
            .iter()
            .flat_map(|c| c.parts.iter())
            .flat_map(|(u, v)| [u.len(), v.len()])
            .filter(|&n| n > 0)
            .fold(1, |acc, n| acc.lcm(&n))
    }
}

impl fmt::Display for SparseNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_omega_regex() {
            Ok(e) => write!(f, "{e}"),
            Err(_) => write!(
                f,
                "base {} arity {}: ∅",
                self.alphabet.base(),
                self.alphabet.arity()
            ),
        }
    }
}

/// Phase structure of a cyclic component of a sparse automaton: every edge
/// `x -a-> y` inside it reads `a = period[phase[x]]` and advances the phase by
/// one modulo `|period|`.
struct Component {
    period: Word,
    phase: BTreeMap<State, usize>,
}

fn component_phases(succ: &[Vec<(Letter, State)>], sccs: &Sccs, c: usize) -> Result<Component> {
    let members = &sccs.members[c];
    let root = members[0];
    let inside = |q: State| sccs.comp[q] == c;
    let adj: Vec<Vec<State>> = succ
        .iter()
        .map(|s| s.iter().map(|&(_, t)| t).collect())
        .collect();
    // shortest cycle through root: BFS to each predecessor of root
    let parent = graph::bfs_tree(&adj, root, inside);
    let mut best: Option<Word> = None;
    for &x in members {
        if parent[x].is_none() {
            continue;
        }
        for &(l, t) in &succ[x] {
            if t != root {
                continue;
            }
            let mut path = vec![l];
            let mut v = x;
            while v != root {
                let p = parent[v].expect("on the BFS tree");
                let label = succ[p]
                    .iter()
                    .find(|&&(_, t)| t == v)
                    .map(|&(l, _)| l)
                    .expect("tree edge exists");
                path.push(label);
                v = p;
            }
            path.reverse();
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
    }
    let cycle = best.expect("cyclic component has a cycle through every member");
    let period = primitive_root(&cycle).to_vec();
    let n = period.len();
    let mut phase = BTreeMap::new();
    phase.insert(root, 0usize);
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        let px = phase[&x];
        for &(l, y) in &succ[x] {
            if !inside(y) {
                continue;
            }
            if l != period[px] {
                return Err(Error::NotSparse);
            }
            let py = (px + 1) % n;
            match phase.get(&y) {
                Some(&q) if q != py => return Err(Error::NotSparse),
                Some(_) => {}
                None => {
                    phase.insert(y, py);
                    stack.push(y);
                }
            }
        }
    }
    Ok(Component { period, phase })
}

/// Lengths of paths from `x` to each member of its component, as an
/// eventually periodic sequence of reachable sets `R_0, R_1, ...`.
struct Reach {
    sets: Vec<BTreeSet<State>>,
    preperiod: usize,
    period: usize,
}

impl Reach {
    fn compute(succ: &[Vec<(Letter, State)>], sccs: &Sccs, x: State) -> Reach {
        let c = sccs.comp[x];
        let mut sets: Vec<BTreeSet<State>> = Vec::new();
        let mut index: BTreeMap<BTreeSet<State>, usize> = BTreeMap::new();
        let mut current: BTreeSet<State> = [x].into_iter().collect();
        loop {
            if let Some(&i) = index.get(&current) {
                let period = sets.len() - i;
                return Reach {
                    sets,
                    preperiod: i,
                    period,
                };
            }
            index.insert(current.clone(), sets.len());
            let next = current
                .iter()
                .flat_map(|&q| succ[q].iter())
                .map(|&(_, t)| t)
                .filter(|&t| sccs.comp[t] == c)
                .collect();
            sets.push(core::mem::replace(&mut current, next));
        }
    }

    fn at(&self, n: usize) -> &BTreeSet<State> {
        if n < self.sets.len() {
            &self.sets[n]
        } else {
            &self.sets[self.preperiod + (n - self.preperiod) % self.period]
        }
    }
}

struct Builder<'a> {
    a: &'a BuchiAutomaton,
    succ: Vec<Vec<(Letter, State)>>,
    sccs: Sccs,
    components: BTreeMap<usize, Component>,
    reach: BTreeMap<State, Reach>,
    chains: BTreeSet<Chain>,
    cap: usize,
}

impl Builder<'_> {
    /// The infinite word read along any path inside the component from `x`,
    /// truncated to `n` letters.
    fn stream(&self, x: State, n: usize) -> Word {
        let comp = &self.components[&self.sccs.comp[x]];
        let start = comp.phase[&x];
        let p = &comp.period;
        (0..n).map(|i| p[(start + i) % p.len()]).collect()
    }

    fn emit(&mut self, mut parts: Vec<(Word, Word)>) -> Result<()> {
        canonicalize_tail(&mut parts);
        self.chains.insert(Chain { parts });
        if self.chains.len() > self.cap {
            return Err(Error::ResourceLimit {
                what: "normal-form chains",
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn visit(&mut self, x: State, pending: Word, stars: &mut Vec<(Word, Word)>) -> Result<()> {
        let c = self.sccs.comp[x];
        if !self.sccs.cyclic[c] {
            for (l, y) in self.succ[x].clone() {
                let mut next = pending.clone();
                next.push(l);
                self.visit(y, next, stars)?;
            }
            return Ok(());
        }
        let members = self.sccs.members[c].clone();
        let period_len = self.components[&c].period.len();
        if members.iter().any(|&q| self.a.is_accepting(q)) {
            let mut parts = stars.clone();
            parts.push((pending.clone(), self.stream(x, period_len)));
            self.emit(parts)?;
        }
        if !self.reach.contains_key(&x) {
            let r = Reach::compute(&self.succ, &self.sccs, x);
            self.reach.insert(x, r);
        }
        let (preperiod, period) = {
            let r = &self.reach[&x];
            (r.preperiod, r.period.lcm(&period_len))
        };
        for &y in &members {
            let exits: Vec<(Letter, State)> = self.succ[y]
                .iter()
                .copied()
                .filter(|&(_, z)| self.sccs.comp[z] != c)
                .collect();
            if exits.is_empty() {
                continue;
            }
            let fixed: Vec<usize> = (0..preperiod)
                .filter(|&n| self.reach[&x].at(n).contains(&y))
                .collect();
            let periodic: Vec<usize> = (preperiod..preperiod + period)
                .filter(|&n| self.reach[&x].at(n).contains(&y))
                .collect();
            for &(l, z) in &exits {
                for &n in &fixed {
                    let mut next = pending.clone();
                    next.extend(self.stream(x, n));
                    next.push(l);
                    self.visit(z, next, stars)?;
                }
                for &rho in &periodic {
                    let s = self.stream(x, rho + period);
                    let mut u = pending.clone();
                    u.extend_from_slice(&s[..rho]);
                    stars.push((u, s[rho..].to_vec()));
                    self.visit(z, vec![l], stars)?;
                    stars.pop();
                }
            }
        }
        Ok(())
    }
}

/// Chains read off the condensation of a sparse automaton.
///
/// Inside a cyclic component of a sparse automaton every path from a state
/// `x` reads a prefix of one fixed periodic word, so the paths from `x` to an
/// exit are described by their lengths alone. Those lengths form an
/// eventually periodic set, giving finitely many fixed words and starred
/// segments per exit.
pub fn sparse_normal_form(a: &BuchiAutomaton) -> Result<SparseNormalForm> {
    sparse_normal_form_capped(a, DEFAULT_CHAIN_CAP)
}

pub fn sparse_normal_form_capped(a: &BuchiAutomaton, cap: usize) -> Result<SparseNormalForm> {
    let a = a.trim()?;
    let succ = a.successors();
    let sccs = a.sccs();
    let mut components = BTreeMap::new();
    for c in 0..sccs.count() {
        if sccs.cyclic[c] {
            components.insert(c, component_phases(&succ, &sccs, c)?);
        }
    }
    let mut b = Builder {
        a: &a,
        succ,
        sccs,
        components,
        reach: BTreeMap::new(),
        chains: BTreeSet::new(),
        cap,
    };
    for &i in a.initial() {
        b.visit(i, Vec::new(), &mut Vec::new())?;
    }
    Ok(SparseNormalForm {
        alphabet: a.alphabet(),
        chains: merge_chains(b.chains).into_iter().collect(),
    })
}

/// Folds pairs `p v v* R` and `p R` into `p v* R` until no pair is left.
fn merge_chains(mut chains: BTreeSet<Chain>) -> BTreeSet<Chain> {
    'search: loop {
        for x in &chains {
            for i in 0..x.depth() - 1 {
                let (u, v) = &x.parts[i];
                if !u.ends_with(v) {
                    continue;
                }
                let p = &u[..u.len() - v.len()];
                let mut rest = x.parts[..i].to_vec();
                let (u2, v2) = &x.parts[i + 1];
                let mut joined = p.to_vec();
                joined.extend_from_slice(u2);
                rest.push((joined, v2.clone()));
                rest.extend_from_slice(&x.parts[i + 2..]);
                canonicalize_tail(&mut rest);
                let y = Chain { parts: rest };
                if chains.contains(&y) {
                    let mut merged = x.parts.clone();
                    merged[i].0 = p.to_vec();
                    let x = x.clone();
                    chains.remove(&x);
                    chains.remove(&y);
                    chains.insert(Chain { parts: merged });
                    continue 'search;
                }
            }
        }
        return chains;
    }
}

/// Rewrites every chain so that all its cycle words share one length, the lcm
/// `N` of the original lengths: `v_i*` becomes `∪_{a < N/|v_i|} v_i^a (v_i^{N/|v_i|})*`.
pub fn normalize_cycle_lengths(f: &SparseNormalForm) -> SparseNormalForm {
    let mut out = Vec::new();
    for chain in &f.chains {
        let n = chain
            .parts
            .iter()
            .fold(1usize, |acc, (_, v)| acc.lcm(&v.len()));
        let mut partial: Vec<Vec<(Word, Word)>> = vec![Vec::new()];
        let (init, last) = chain.parts.split_at(chain.parts.len() - 1);
        for (u, v) in init {
            let k = n / v.len();
            let long = power(v, k);
            let mut next = Vec::new();
            for p in &partial {
                for a in 0..k {
                    let mut u2 = u.clone();
                    u2.extend(power(v, a));
                    let mut q = p.clone();
                    q.push((u2, long.clone()));
                    next.push(q);
                }
            }
            partial = next;
        }
        let (u, v) = &last[0];
        for mut p in partial {
            p.push((u.clone(), power(v, n / v.len())));
            out.push(Chain { parts: p });
        }
    }
    SparseNormalForm::new(f.alphabet, out)
}

/// Every truncation of every chain; denotes the topological closure.
pub fn sparse_closure(f: &SparseNormalForm) -> SparseNormalForm {
    let chains = f
        .chains
        .iter()
        .flat_map(|c| (1..=c.depth()).map(move |j| c.truncate(j)));
    SparseNormalForm::new(f.alphabet, chains)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::omega::parse_omega_regex;
    use alloc::string::ToString;

    fn w(al: Alphabet, s: &str) -> Word {
        al.word_from_digits(s).unwrap()
    }

    fn chain(al: Alphabet, parts: &[(&str, &str)]) -> Chain {
        Chain::new(parts.iter().map(|(u, v)| (w(al, u), w(al, v))).collect()).unwrap()
    }

    #[test]
    fn unrolled_loops_are_merged() {
        // the compiled automaton enters the 0-loop through a separate state
        let a = parse_omega_regex("base 2 arity 1: 0*1(0)^w")
            .unwrap()
            .to_automaton()
            .unwrap();
        let al = a.alphabet();
        let f = sparse_normal_form(&a).unwrap();
        assert_eq!(f.chains, vec![chain(al, &[("", "0"), ("1", "0")])]);
    }

    #[test]
    fn dyadic_points_chain() {
        let a = fixtures::dyadic_points();
        let al = a.alphabet();
        let f = sparse_normal_form(&a).unwrap();
        assert_eq!(f.chains, vec![chain(al, &[("", "0"), ("1", "0")])]);
        assert_eq!(f.to_string(), "base 2 arity 1: 0*1(0)^w");
    }

    #[test]
    fn single_word_chain() {
        let a = parse_omega_regex("base 2 arity 1: (1)^w")
            .unwrap()
            .to_automaton()
            .unwrap();
        let f = sparse_normal_form(&a).unwrap();
        assert_eq!(f.chains, vec![chain(a.alphabet(), &[("", "1")])]);
    }

    #[test]
    fn cantor_is_not_sparse() {
        assert_eq!(
            sparse_normal_form(&fixtures::cantor()),
            Err(Error::NotSparse)
        );
    }

    #[test]
    fn long_component_cycle() {
        // a 4-cycle reading (01)^2 with an exit after an odd number of steps
        let a = BuchiAutomaton::from_digits(
            2,
            1,
            5,
            &[0],
            &[4],
            &[
                (0, &[0], 1),
                (1, &[1], 2),
                (2, &[0], 3),
                (3, &[1], 0),
                (1, &[1], 4),
                (4, &[1], 4),
            ],
        )
        .unwrap();
        let al = a.alphabet();
        let f = sparse_normal_form(&a).unwrap();
        assert_eq!(f.chains, vec![chain(al, &[("0", "1010"), ("", "1")])]);
    }

    #[test]
    fn chain_cap() {
        let a = fixtures::dyadic_points();
        assert!(matches!(
            sparse_normal_form_capped(&a, 0),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn normalization_fans_out() {
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "0"), ("1", "01")])]);
        let g = normalize_cycle_lengths(&f);
        assert_eq!(
            g.chains,
            vec![
                chain(al, &[("", "00"), ("1", "01")]),
                chain(al, &[("0", "00"), ("1", "01")]),
            ]
        );
        let h = SparseNormalForm::new(al, [chain(al, &[("", "0"), ("1", "1")])]);
        assert_eq!(normalize_cycle_lengths(&h), h);
        let empty = SparseNormalForm::new(al, []);
        assert_eq!(normalize_cycle_lengths(&empty), empty);
    }

    #[test]
    fn closure_adds_truncations() {
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "0"), ("1", "0")])]);
        let g = sparse_closure(&f);
        assert_eq!(
            g.chains,
            vec![chain(al, &[("", "0")]), chain(al, &[("", "0"), ("1", "0")])]
        );
        assert_eq!(sparse_closure(&g), g);
        let point = SparseNormalForm::new(al, [chain(al, &[("1", "0")])]);
        assert_eq!(sparse_closure(&point), point);
        let three = SparseNormalForm::new(al, [chain(al, &[("", "0"), ("1", "0"), ("1", "0")])]);
        assert_eq!(sparse_closure(&three).chains.len(), 3);
    }

    #[test]
    fn word_length_lcm() {
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "00"), ("101", "0")])]);
        assert_eq!(f.word_length_lcm(), 6);
    }
}
