//! `L = ∪ V_q W_q^ω` by state elimination.
//!
//! For an accepting state `q` on a cycle, `V_q` is the language of paths from
//! an initial state that reach `q` for the first time and `W_q` the language of
//! first returns to `q`. A run visits `q` infinitely often iff it reads a word
//! of `V_q W_q^ω`, so the union over `q` is the whole language.

use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::automaton::{BuchiAutomaton, State};
use crate::error::{Error, Result};
use crate::omega::OmegaRegex;
use crate::regex::Regex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VWComponent {
    pub state: State,
    pub v: Regex,
    pub w: Regex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VWDecomposition {
    pub alphabet: Alphabet,
    pub components: Vec<VWComponent>,
}

impl VWDecomposition {
    pub fn to_omega_regex(&self) -> Result<OmegaRegex> {
        OmegaRegex::new(
            self.alphabet,
            self.components
                .iter()
                .map(|c| (c.v.clone(), c.w.clone()))
                .collect(),
        )
    }
}

/// Generalized NFA with regex labels, eliminated one interior node at a time.
struct Gnfa {
    edges: Vec<Vec<Regex>>,
}

impl Gnfa {
    fn new(n: usize) -> Self {
        Gnfa {
            edges: vec![vec![Regex::Empty; n]; n],
        }
    }

    fn add(&mut self, i: usize, j: usize, r: Regex) {
        let old = core::mem::replace(&mut self.edges[i][j], Regex::Empty);
        self.edges[i][j] = Regex::union(old, r);
    }

    fn eliminate(&mut self, k: usize) {
        let n = self.edges.len();
        let loop_k = Regex::star(self.edges[k][k].clone());
        let ins: Vec<usize> = (0..n)
            .filter(|&i| i != k && !self.edges[i][k].is_empty_language())
            .collect();
        let outs: Vec<usize> = (0..n)
            .filter(|&j| j != k && !self.edges[k][j].is_empty_language())
            .collect();
        for &i in &ins {
            for &j in &outs {
                let path = Regex::concat_all([
                    self.edges[i][k].clone(),
                    loop_k.clone(),
                    self.edges[k][j].clone(),
                ]);
                self.add(i, j, path);
            }
        }
        for i in 0..n {
            self.edges[i][k] = Regex::Empty;
            self.edges[k][i] = Regex::Empty;
        }
    }
}

/// Regex for paths from `src` (or from the initial states when `src` is
/// `None`) into `q`, where `q` is never passed through on the way.
fn paths_into(a: &BuchiAutomaton, q: State, src: Option<State>) -> Regex {
    let n = a.state_count();
    // nodes 0..n are automaton states; n is the source, n + 1 the sink
    let (source, sink) = (n, n + 1);
    let mut g = Gnfa::new(n + 2);
    match src {
        Some(s) => {
            for t in a.transitions().iter().filter(|t| t.from == s) {
                let to = if t.to == q { sink } else { t.to };
                g.add(source, to, Regex::Lit(t.letter));
            }
        }
        None => {
            for &i in a.initial() {
                let to = if i == q { sink } else { i };
                g.add(source, to, Regex::Epsilon);
            }
        }
    }
    for t in a.transitions() {
        if t.from == q {
            continue;
        }
        let to = if t.to == q { sink } else { t.to };
        g.add(t.from, to, Regex::Lit(t.letter));
    }
    for k in (0..n).filter(|&k| k != q) {
        g.eliminate(k);
    }
    g.edges[source][sink].clone()
}

/// One component per accepting state lying on a cycle, in ascending state order.
pub fn vw_decompose(a: &BuchiAutomaton) -> Result<VWDecomposition> {
    let a = a.trim()?;
    let sccs = a.sccs();
    let mut components = Vec::new();
    for &q in a.accepting() {
        if !sccs.is_cyclic_node(q) {
            continue;
        }
        let v = paths_into(&a, q, None);
        let w = paths_into(&a, q, Some(q));
        if v.is_empty_language() || w.is_empty_language() {
            continue;
        }
        components.push(VWComponent { state: q, v, w });
    }
    if components.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    Ok(VWDecomposition {
        alphabet: a.alphabet(),
        components,
    })
}
