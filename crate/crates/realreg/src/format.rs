//! Text formats: automata, exponential-sum descriptions, intersection
//! problems, and detection of which one a file holds.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use realreg_core::rational::{self, Rational};
use realreg_core::{
    parse_omega_regex, Alphabet, BuchiAutomaton, Error, ExpChain, ExpSumDescription, OmegaRegex,
    Result, Transition, TwoBaseProblem,
};

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {what}: {tok:?}"),
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads the `buchi v1` format. The automaton is returned as written, without
/// trimming.
pub fn parse_automaton(text: &str) -> Result<BuchiAutomaton> {
    let mut lines = significant_lines(text);
    match lines.next() {
        Some((_, "buchi v1")) => {}
        Some((n, _)) => return Err(parse_error(n, "expected \"buchi v1\"")),
        None => return Err(parse_error(1, "empty input")),
    }
    let mut base: Option<u32> = None;
    let mut arity: Option<usize> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<BTreeSet<usize>> = None;
    let mut accepting: Option<BTreeSet<usize>> = None;
    let mut trans: Vec<(usize, usize, Vec<u32>, usize)> = Vec::new();
    for (n, line) in lines {
        let mut toks = line.split_whitespace();
        let key = toks.next().expect("line is nonempty");
        let state = |tok: Option<&str>, states: Option<usize>| -> Result<usize> {
            let q: usize = number(n, tok, "state id")?;
            match states {
                Some(s) if q < s => Ok(q),
                Some(_) => Err(parse_error(n, format!("state {q} out of range"))),
                None => Err(parse_error(n, "\"states\" must come first")),
            }
        };
        match key {
            "base" => base = Some(number(n, toks.next(), "base")?),
            "arity" => arity = Some(number(n, toks.next(), "arity")?),
            "states" => {
                let s: usize = number(n, toks.next(), "state count")?;
                if s == 0 {
                    return Err(parse_error(n, "an automaton needs at least one state"));
                }
                states = Some(s);
            }
            "initial" | "accepting" => {
                let set = toks
                    .by_ref()
                    .map(|t| state(Some(t), states))
                    .collect::<Result<BTreeSet<usize>>>()?;
                if key == "initial" {
                    if set.is_empty() {
                        return Err(parse_error(n, "at least one initial state is required"));
                    }
                    initial = Some(set);
                } else {
                    accepting = Some(set);
                }
            }
            "trans" => {
                let from = state(toks.next(), states)?;
                let label = toks
                    .next()
                    .ok_or_else(|| parse_error(n, "missing digit tuple"))?;
                let to = state(toks.next(), states)?;
                let digits = label
                    .split(',')
                    .map(|d| number::<u32>(n, Some(d), "digit"))
                    .collect::<Result<Vec<u32>>>()?;
                trans.push((n, from, digits, to));
            }
            other => return Err(parse_error(n, format!("unknown directive {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(parse_error(n, "trailing tokens"));
        }
    }
    let end = text.lines().count().max(1);
    let missing = |what: &str| parse_error(end, format!("missing \"{what}\" line"));
    let alphabet = Alphabet::new(
        base.ok_or_else(|| missing("base"))?,
        arity.ok_or_else(|| missing("arity"))?,
    )?;
    let mut transitions = Vec::with_capacity(trans.len());
    for (_, from, digits, to) in trans {
        let letter = alphabet.encode(&digits)?;
        transitions.push(Transition { from, letter, to });
    }
    BuchiAutomaton::new(
        alphabet,
        states.ok_or_else(|| missing("states"))?,
        initial.ok_or_else(|| missing("initial"))?,
        accepting.unwrap_or_default(),
        transitions,
    )
}

pub fn write_automaton(a: &BuchiAutomaton) -> String {
    let al = a.alphabet();
    let list = |s: &BTreeSet<usize>| s.iter().map(|q| format!(" {q}")).collect::<String>();
    let mut out = String::from("buchi v1\n");
    let _ = writeln!(out, "base {}", al.base());
    let _ = writeln!(out, "arity {}", al.arity());
    let _ = writeln!(out, "states {}", a.state_count());
    let _ = writeln!(out, "initial{}", list(a.initial()));
    let _ = writeln!(out, "accepting{}", list(a.accepting()));
    for t in a.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} {}",
            t.from,
            al.format_letter(t.letter),
            t.to
        );
    }
    out
}

fn write_point(p: &[Rational]) -> String {
    rational::format_vec(p)
}

/// `chain c0=<q> (c1=<q>,d1=<n>) ...`
pub fn write_chain(c: &ExpChain) -> String {
    let mut out = format!("chain c0={}", write_point(&c.coeffs[0]));
    for (i, (ci, d)) in c.coeffs[1..].iter().zip(&c.steps).enumerate() {
        let _ = write!(out, " (c{}={},d{}={d})", i + 1, write_point(ci), i + 1);
    }
    out
}

pub fn write_expsum(e: &ExpSumDescription) -> String {
    let mut out = format!("expsum base {} arity {}\n", e.base, e.arity);
    for c in &e.chains {
        out.push_str(&write_chain(c));
        out.push('\n');
    }
    out
}

/// Splits `s` at top-level whitespace, keeping parenthesized groups whole.
fn groups(line: usize, s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start: Option<usize> = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(parse_error(line, "unbalanced parentheses"));
        }
        if ch.is_whitespace() && depth == 0 {
            if let Some(b) = start.take() {
                out.push(&s[b..i]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if depth != 0 {
        return Err(parse_error(line, "unbalanced parentheses"));
    }
    if let Some(b) = start {
        out.push(&s[b..]);
    }
    Ok(out)
}

fn parse_point(line: usize, s: &str, arity: usize) -> Result<Vec<Rational>> {
    let p = rational::parse_vec(s).map_err(|e| parse_error(line, e.to_string()))?;
    if p.len() != arity {
        return Err(Error::ArityMismatch {
            left: p.len(),
            right: arity,
        });
    }
    Ok(p)
}

pub fn parse_chain(line: usize, s: &str, arity: usize) -> Result<ExpChain> {
    let rest = s
        .strip_prefix("chain")
        .ok_or_else(|| parse_error(line, "expected \"chain\""))?;
    let parts = groups(line, rest)?;
    let (first, terms) = parts
        .split_first()
        .ok_or_else(|| parse_error(line, "missing c0"))?;
    let c0 = first
        .strip_prefix("c0=")
        .ok_or_else(|| parse_error(line, "expected c0=<value>"))?;
    let mut coeffs = vec![parse_point(line, c0, arity)?];
    let mut steps = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_error(line, format!("expected (c{}=..,d{}=..)", i + 1, i + 1)))?;
        let (c, d) = inner
            .rsplit_once(&format!(",d{}=", i + 1))
            .ok_or_else(|| parse_error(line, format!("missing d{}", i + 1)))?;
        let c = c
            .strip_prefix(&format!("c{}=", i + 1))
            .ok_or_else(|| parse_error(line, format!("missing c{}", i + 1)))?;
        coeffs.push(parse_point(line, c, arity)?);
        steps.push(number(line, Some(d), "step")?);
    }
    ExpChain::new(coeffs, steps)
}

fn parse_base_header(line: usize, toks: &[&str]) -> Result<(u32, usize)> {
    match toks {
        ["base", b] => Ok((number(line, Some(b), "base")?, 1)),
        ["base", b, "arity", m] => Ok((
            number(line, Some(b), "base")?,
            number(line, Some(m), "arity")?,
        )),
        _ => Err(parse_error(line, "expected \"base <r> [arity <m>]\"")),
    }
}

pub fn parse_expsum(text: &str) -> Result<ExpSumDescription> {
    let mut lines = significant_lines(text);
    let (n, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (base, arity) = match toks.split_first() {
        Some((&"expsum", rest)) => parse_base_header(n, rest)?,
        _ => return Err(parse_error(n, "expected \"expsum base <r> arity <m>\"")),
    };
    let chains = lines
        .map(|(n, l)| parse_chain(n, l, arity))
        .collect::<Result<Vec<_>>>()?;
    ExpSumDescription::new(base, arity, chains)
}

/// An intersection problem; `height` is `None` when the file omits it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub s: ExpSumDescription,
    pub t: ExpSumDescription,
    pub height: Option<u64>,
}

impl ProblemFile {
    pub fn with_height(self, default: u64) -> TwoBaseProblem {
        TwoBaseProblem {
            height: self.height.unwrap_or(default),
            s: self.s,
            t: self.t,
        }
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut height = None;
    let mut blocks: Vec<(char, u32, usize, Vec<ExpChain>)> = Vec::new();
    for (n, line) in significant_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["height", h] => height = Some(number(n, Some(h), "height")?),
            [label @ ("S" | "T"), rest @ ..] => {
                let (b, m) = parse_base_header(n, rest)?;
                let c = label.chars().next().expect("nonempty label");
                if blocks.iter().any(|blk| blk.0 == c) {
                    return Err(parse_error(n, format!("duplicate block {c}")));
                }
                blocks.push((c, b, m, Vec::new()));
            }
            ["chain", ..] => {
                let blk = blocks
                    .last_mut()
                    .ok_or_else(|| parse_error(n, "chain outside an S or T block"))?;
                blk.3.push(parse_chain(n, line, blk.2)?);
            }
            _ => return Err(parse_error(n, format!("unexpected line {line:?}"))),
        }
    }
    let mut take = |c: char| -> Result<ExpSumDescription> {
        let i = blocks
            .iter()
            .position(|b| b.0 == c)
            .ok_or_else(|| parse_error(0, format!("missing {c} block")))?;
        let (_, b, m, chains) = blocks.remove(i);
        ExpSumDescription::new(b, m, chains)
    };
    let s = take('S')?;
    let t = take('T')?;
    Ok(ProblemFile { s, t, height })
}

pub fn write_problem(p: &TwoBaseProblem) -> String {
    let mut out = format!("height {}\n", p.height);
    for (label, e) in [("S", &p.s), ("T", &p.t)] {
        let _ = writeln!(out, "{label} base {} arity {}", e.base, e.arity);
        for c in &e.chains {
            out.push_str(&write_chain(c));
            out.push('\n');
        }
    }
    out
}

/// The contents of an input file.
#[derive(Clone, Debug)]
pub enum Input {
    Automaton(BuchiAutomaton),
    Regex(OmegaRegex),
    ExpSum(ExpSumDescription),
}

impl Input {
    /// The automaton form; descriptions have none.
    pub fn automaton(&self) -> Result<BuchiAutomaton> {
        match self {
            Input::Automaton(a) => Ok(a.clone()),
            Input::Regex(e) => e.to_automaton(),
            Input::ExpSum(_) => Err(Error::Domain(
                "this command needs an automaton or an ω-regex, not a description".into(),
            )),
        }
    }
}

/// Detects the format from the first significant line: `buchi v1`,
/// `expsum ...`, or an ω-regex header `base <r> arity <m>: ...`.
pub fn parse_input(text: &str) -> Result<Input> {
    let first = significant_lines(text).next().map(|(_, l)| l);
    match first {
        Some(l) if l.starts_with("buchi") => parse_automaton(text).map(Input::Automaton),
        Some(l) if l.starts_with("expsum") => parse_expsum(text).map(Input::ExpSum),
        Some(l) if l.starts_with("base") => parse_omega_regex(text).map(Input::Regex),
        Some(_) => Err(parse_error(1, "unrecognized input format")),
        None => Err(parse_error(1, "empty input")),
    }
}
