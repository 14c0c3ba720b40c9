//! ω-regular expressions `V_1 W_1^ω | ... | V_k W_k^ω`: parsing, printing and
//! compilation to Büchi automata.
//!
//! Text form: a header `base <r> arity <m>:` followed by the expression.
//! Literals are digit tuples `d1,...,dm`; for bases up to 10 every digit is a
//! single character, so `0*1(0)^w` is a concatenation of four letters. Larger
//! bases read maximal digit runs and need whitespace between letters.
//! `()` denotes the empty word and `^w` (or `^ω`) the ω-power.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::automaton::{BuchiAutomaton, Transition};
use crate::error::{Error, Result};
use crate::regex::{Enfa, Regex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaRegex {
    pub alphabet: Alphabet,
    /// `(V, W)` pairs; `W` never contains the empty word.
    pub branches: Vec<(Regex, Regex)>,
}

impl OmegaRegex {
    pub fn new(alphabet: Alphabet, branches: Vec<(Regex, Regex)>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::EmptyLanguage);
        }
        if branches.iter().any(|(_, w)| w.nullable()) {
            return Err(Error::OmegaArity);
        }
        Ok(OmegaRegex { alphabet, branches })
    }

    /// Builds a trim automaton recognizing the language.
    ///
    /// Each branch becomes a Thompson fragment for `V` followed by a hub state
    /// that loops through a fragment for `W`. After ε-removal a run is accepting
    /// iff it passes the hub infinitely often; this is tracked by a flag on
    /// each state recording whether the edge entering it crossed the hub.
    pub fn to_automaton(&self) -> Result<BuchiAutomaton> {
        let mut nfa = Enfa::default();
        let mut starts = Vec::new();
        let mut hubs = Vec::new();
        for (v, w) in &self.branches {
            let (sv, ev) = nfa.fragment(v);
            let (sw, ew) = nfa.fragment(w);
            let h = nfa.add_state();
            nfa.eps[ev].push(h);
            nfa.eps[h].push(sw);
            nfa.eps[ew].push(h);
            starts.push(sv);
            hubs.push(h);
        }
        let is_hub = |q: usize| hubs.contains(&q);
        let closures: Vec<Vec<usize>> = (0..nfa.len()).map(|q| nfa.closure([q])).collect();
        // states reachable by an ε-path from p that crosses a hub
        let through_hub: Vec<Vec<usize>> = closures
            .iter()
            .map(|c| {
                let mut out: Vec<usize> = c
                    .iter()
                    .filter(|&&h| is_hub(h))
                    .flat_map(|&h| closures[h].iter().copied())
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();

        type Node = (usize, bool);
        let mut ids: BTreeMap<Node, usize> = BTreeMap::new();
        let mut queue: VecDeque<Node> = VecDeque::new();
        for &s in &starts {
            let node = (s, false);
            if !ids.contains_key(&node) {
                ids.insert(node, ids.len());
                queue.push_back(node);
            }
        }
        let mut transitions = Vec::new();
        while let Some(node @ (p, _)) = queue.pop_front() {
            let from = ids[&node];
            let mut edges: Vec<(Letter, usize, bool)> = Vec::new();
            for &q in &closures[p] {
                let flag = through_hub[p].binary_search(&q).is_ok();
                for &(l, t) in &nfa.letters[q] {
                    edges.push((l, t, flag));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            for (letter, t, flag) in edges {
                let target = (t, flag);
                let to = match ids.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = ids.len();
                        ids.insert(target, id);
                        queue.push_back(target);
                        id
                    }
                };
                transitions.push(Transition { from, letter, to });
            }
        }
        let initial: Vec<usize> = starts.iter().map(|&s| ids[&(s, false)]).collect();
        let accepting = ids.iter().filter(|((_, f), _)| *f).map(|(_, &id)| id);
        BuchiAutomaton::new(self.alphabet, ids.len(), initial, accepting, transitions)?.trim()
    }
}

impl fmt::Display for OmegaRegex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "base {} arity {}: ",
            self.alphabet.base(),
            self.alphabet.arity()
        )?;
        for (i, (v, w)) in self.branches.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if *v != Regex::Epsilon {
                // concatenation binds tighter than union, so only unions need parens
                let text = v.format(self.alphabet);
                if matches!(v, Regex::Union(_)) {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
                if self.alphabet.arity() > 1 || self.alphabet.base() > 10 {
                    f.write_str(" ")?;
                }
            }
            write!(f, "({})^w", w.format(self.alphabet))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Ast {
    Lit(Letter),
    Concat(Vec<Ast>),
    Union(Vec<Ast>),
    Star(Box<Ast>),
    Omega(Box<Ast>),
}

impl Ast {
    fn has_omega(&self) -> bool {
        match self {
            Ast::Lit(_) => false,
            Ast::Omega(_) => true,
            Ast::Star(x) => x.has_omega(),
            Ast::Concat(xs) | Ast::Union(xs) => xs.iter().any(Ast::has_omega),
        }
    }

    fn finite(&self, line: usize) -> Result<Regex> {
        Ok(match self {
            Ast::Lit(l) => Regex::Lit(*l),
            Ast::Concat(xs) => Regex::concat_all(
                xs.iter()
                    .map(|x| x.finite(line))
                    .collect::<Result<Vec<_>>>()?,
            ),
            Ast::Union(xs) => Regex::union_all(
                xs.iter()
                    .map(|x| x.finite(line))
                    .collect::<Result<Vec<_>>>()?,
            ),
            Ast::Star(x) => Regex::star(x.finite(line)?),
            Ast::Omega(_) => return Err(Error::parse(line, "ω-power must be rightmost")),
        })
    }

    /// Splits an expression into `V W^ω` branches.
    fn branches(&self, line: usize) -> Result<Vec<(Regex, Regex)>> {
        match self {
            Ast::Omega(x) => {
                if x.has_omega() {
                    return Err(Error::parse(line, "nested ω-power"));
                }
                let w = x.finite(line)?;
                if w.nullable() {
                    return Err(Error::OmegaArity);
                }
                Ok(vec![(Regex::Epsilon, w)])
            }
            Ast::Union(xs) => {
                let mut out = Vec::new();
                for x in xs {
                    out.extend(x.branches(line)?);
                }
                Ok(out)
            }
            Ast::Concat(xs) => {
                let Some((last, init)) = xs.split_last() else {
                    return Err(Error::parse(line, "every branch must end with an ω-power"));
                };
                let prefix = Regex::concat_all(
                    init.iter()
                        .map(|x| x.finite(line))
                        .collect::<Result<Vec<_>>>()?,
                );
                Ok(last
                    .branches(line)?
                    .into_iter()
                    .map(|(v, w)| (Regex::concat(prefix.clone(), v), w))
                    .collect())
            }
            Ast::Lit(_) | Ast::Star(_) => {
                Err(Error::parse(line, "every branch must end with an ω-power"))
            }
        }
    }
}

struct Parser {
    chars: Vec<(char, usize)>,
    pos: usize,
    alphabet: Alphabet,
}

impl Parser {
    fn peek(&mut self) -> Option<char> {
        while let Some(&(c, _)) = self.chars.get(self.pos) {
            if c.is_whitespace() {
                self.pos += 1;
            } else {
                return Some(c);
            }
        }
        None
    }

    fn line(&self) -> usize {
        self.chars
            .get(self.pos)
            .or(self.chars.last())
            .map_or(1, |&(_, l)| l)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(Error::parse(
                self.line(),
                alloc::format!("expected {want:?}, found {c:?}"),
            )),
            None => Err(Error::parse(
                self.line(),
                alloc::format!("expected {want:?}, found end of input"),
            )),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut alts = vec![self.term()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            alts.push(self.term()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().expect("one alternative")
        } else {
            Ast::Union(alts)
        })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            factors.push(self.factor()?);
        }
        Ok(Ast::Concat(factors))
    }

    fn factor(&mut self) -> Result<Ast> {
        let mut atom = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    atom = Ast::Star(Box::new(atom));
                }
                Some('^') => {
                    self.pos += 1;
                    match self.chars.get(self.pos) {
                        Some(&('w', _)) | Some(&('ω', _)) => self.pos += 1,
                        _ => return Err(Error::parse(self.line(), "expected 'w' after '^'")),
                    }
                    atom = Ast::Omega(Box::new(atom));
                }
                _ => return Ok(atom),
            }
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.literal(),
            Some(c) => Err(Error::parse(
                self.line(),
                alloc::format!("unexpected character {c:?}"),
            )),
            None => Err(Error::parse(self.line(), "unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<u32> {
        let line = self.line();
        let mut digits = String::new();
        while let Some(&(c, _)) = self.chars.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.pos += 1;
            if self.alphabet.base() <= 10 {
                break;
            }
        }
        if digits.is_empty() {
            return Err(Error::parse(line, "expected a digit"));
        }
        digits
            .parse()
            .map_err(|_| Error::domain(alloc::format!("digit {digits} out of range")))
    }

    fn literal(&mut self) -> Result<Ast> {
        let mut digits = vec![self.number()?];
        while digits.len() < self.alphabet.arity() {
            if self.chars.get(self.pos).map(|&(c, _)| c) != Some(',') {
                return Err(Error::domain(alloc::format!(
                    "tuple has {} digits, arity is {}",
                    digits.len(),
                    self.alphabet.arity()
                )));
            }
            self.pos += 1;
            digits.push(self.number()?);
        }
        if self.chars.get(self.pos).map(|&(c, _)| c) == Some(',') {
            return Err(Error::domain(alloc::format!(
                "tuple longer than arity {}",
                self.alphabet.arity()
            )));
        }
        Ok(Ast::Lit(self.alphabet.encode(&digits)?))
    }
}

fn parse_header(text: &str) -> Result<(Alphabet, usize)> {
    let colon = text
        .find(':')
        .ok_or_else(|| Error::parse(1, "missing header \"base <r> arity <m>:\""))?;
    let header = &text[..colon];
    let line = header.matches('\n').count() + 1;
    let words: Vec<&str> = header.split_whitespace().collect();
    let bad = || Error::parse(line, "header must read \"base <r> arity <m>:\"");
    match words.as_slice() {
        ["base", r, "arity", m] => {
            let r: u32 = r.parse().map_err(|_| bad())?;
            let m: usize = m.parse().map_err(|_| bad())?;
            Ok((Alphabet::new(r, m)?, colon + 1))
        }
        _ => Err(bad()),
    }
}

pub fn parse_omega_regex(text: &str) -> Result<OmegaRegex> {
    let (alphabet, body_start) = parse_header(text)?;
    let mut line = 1;
    let mut chars = Vec::new();
    for (i, c) in text.char_indices() {
        if i >= body_start {
            chars.push((c, line));
        }
        if c == '\n' {
            line += 1;
        }
    }
    let mut p = Parser {
        chars,
        pos: 0,
        alphabet,
    };
    let ast = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(Error::parse(p.line(), alloc::format!("unexpected {c:?}")));
    }
    let branches = ast.branches(p.line())?;
    OmegaRegex::new(alphabet, branches)
}

pub fn regex_to_automaton(e: &OmegaRegex) -> Result<BuchiAutomaton> {
    e.to_automaton()
}
