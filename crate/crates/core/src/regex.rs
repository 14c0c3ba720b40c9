//! Finite-word regular expressions over digit-tuple letters.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Letter};

/// A regular expression. Build values through the smart constructors, which
/// flatten nested unions and concatenations and apply the unit and zero laws.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Lit(Letter),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn word(w: &[Letter]) -> Regex {
        Regex::concat_all(w.iter().map(|&l| Regex::Lit(l)))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::concat_all([a, b])
    }

    pub fn concat_all(parts: impl IntoIterator<Item = Regex>) -> Regex {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Regex::Empty => return Regex::Empty,
                Regex::Epsilon => {}
                Regex::Concat(xs) => out.extend(xs),
                x => out.push(x),
            }
        }
        match out.len() {
            0 => Regex::Epsilon,
            1 => out.pop().expect("one element"),
            _ => Regex::Concat(out),
        }
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::union_all([a, b])
    }

    pub fn union_all(parts: impl IntoIterator<Item = Regex>) -> Regex {
        let mut out = Vec::new();
        for p in parts {
            match p {
                Regex::Empty => {}
                Regex::Union(xs) => out.extend(xs),
                x => out.push(x),
            }
        }
        out.sort();
        out.dedup();
        match out.len() {
            0 => Regex::Empty,
            1 => out.pop().expect("one element"),
            _ => Regex::Union(out),
        }
    }

    pub fn star(a: Regex) -> Regex {
        match a {
            Regex::Empty | Regex::Epsilon => Regex::Epsilon,
            s @ Regex::Star(_) => s,
            x => Regex::Star(Box::new(x)),
        }
    }

    pub fn is_empty_language(&self) -> bool {
        matches!(self, Regex::Empty)
    }

    /// Whether the empty word belongs to the language.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Lit(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Concat(xs) => xs.iter().all(Regex::nullable),
            Regex::Union(xs) => xs.iter().any(Regex::nullable),
        }
    }

    pub fn matches(&self, w: &[Letter]) -> bool {
        let mut nfa = Enfa::default();
        let (s, e) = nfa.fragment(self);
        let mut current = nfa.closure([s]);
        for &l in w {
            let next: Vec<usize> = current
                .iter()
                .flat_map(|&q| nfa.letters[q].iter())
                .filter(|(x, _)| *x == l)
                .map(|&(_, t)| t)
                .collect();
            current = nfa.closure(next);
        }
        current.contains(&e)
    }

    /// Text in the ω-regex grammar (without the header).
    pub fn format(&self, alphabet: Alphabet) -> String {
        let mut out = String::new();
        self.write(alphabet, 0, &mut out);
        out
    }

    fn write(&self, alphabet: Alphabet, prec: u8, out: &mut String) {
        let compact = alphabet.arity() == 1 && alphabet.base() <= 10;
        match self {
            Regex::Empty => out.push('∅'),
            Regex::Epsilon => out.push_str("()"),
            Regex::Lit(l) => out.push_str(&alphabet.format_letter(*l)),
            Regex::Concat(xs) => {
                if prec > 1 {
                    out.push('(');
                }
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 && !compact {
                        out.push(' ');
                    }
                    x.write(alphabet, 2, out);
                }
                if prec > 1 {
                    out.push(')');
                }
            }
            Regex::Union(xs) => {
                if prec > 0 {
                    out.push('(');
                }
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push('|');
                    }
                    x.write(alphabet, 1, out);
                }
                if prec > 0 {
                    out.push(')');
                }
            }
            Regex::Star(x) => {
                x.write(alphabet, 2, out);
                out.push('*');
            }
        }
    }
}

/// Thompson-style ε-NFA. States are indices; `eps` and `letters` hold the
/// outgoing ε- and letter-edges of each state.
#[derive(Clone, Debug, Default)]
pub(crate) struct Enfa {
    pub eps: Vec<Vec<usize>>,
    pub letters: Vec<Vec<(Letter, usize)>>,
}

impl Enfa {
    pub fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.letters.push(Vec::new());
        self.eps.len() - 1
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    /// Adds a fragment for `r`, returning its entry and exit states.
    pub fn fragment(&mut self, r: &Regex) -> (usize, usize) {
        let s = self.add_state();
        let e = self.add_state();
        match r {
            Regex::Empty => {}
            Regex::Epsilon => self.eps[s].push(e),
            Regex::Lit(l) => self.letters[s].push((*l, e)),
            Regex::Concat(xs) => {
                let mut prev = s;
                for x in xs {
                    let (a, b) = self.fragment(x);
                    self.eps[prev].push(a);
                    prev = b;
                }
                self.eps[prev].push(e);
            }
            Regex::Union(xs) => {
                for x in xs {
                    let (a, b) = self.fragment(x);
                    self.eps[s].push(a);
                    self.eps[b].push(e);
                }
            }
            Regex::Star(x) => {
                let (a, b) = self.fragment(x);
                self.eps[s].push(a);
                self.eps[s].push(e);
                self.eps[b].push(a);
                self.eps[b].push(e);
            }
        }
        (s, e)
    }

    /// ε-closure of a set of states, sorted.
    pub fn closure(&self, start: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack: Vec<usize> = Vec::new();
        for s in start {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(v) = stack.pop() {
            for &w in &self.eps[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }
}
