//! The valuation `ν_r`, digit expansions of rationals and membership.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::automaton::BuchiAutomaton;
use crate::error::{Error, Result};
use crate::lasso::LassoWord;
use crate::rational::{self, Rational};

/// `Σ w_i r^{-(i+1)}` per coordinate.
pub fn word_value(alphabet: Alphabet, w: &[Letter]) -> Vec<Rational> {
    let r = BigInt::from(alphabet.base());
    let mut num = vec![BigInt::zero(); alphabet.arity()];
    let mut den = BigInt::one();
    for &l in w {
        den *= &r;
        for (c, n) in num.iter_mut().enumerate() {
            *n = &*n * &r + BigInt::from(alphabet.digit(l, c));
        }
    }
    num.into_iter()
        .map(|n| Rational::new(n, den.clone()))
        .collect()
}

/// `ν_r(spoke · cycle^ω)` per coordinate.
pub fn nu(alphabet: Alphabet, w: &LassoWord) -> Vec<Rational> {
    let r = alphabet.base();
    let head = word_value(alphabet, &w.spoke);
    let tail = word_value(alphabet, &w.cycle);
    let scale = rational::pow(r, -(w.spoke.len() as i64));
    let geo = Rational::one() / (Rational::one() - rational::pow(r, -(w.cycle.len() as i64)));
    head.into_iter()
        .zip(tail)
        .map(|(h, t)| h + &scale * t * &geo)
        .collect()
}

/// Every ultimately periodic base-`r` expansion of `x ∈ [0,1]`, canonical and
/// sorted. Nonzero `r`-adic points inside `(0,1)` have two; `0` and `1` have
/// only `0^ω` and `(r-1)^ω`.
pub fn expansion(x: &Rational, r: u32) -> Result<Vec<LassoWord>> {
    if r < 2 {
        return Err(Error::domain("base must be at least 2"));
    }
    if !rational::in_unit_interval(x) {
        return Err(Error::domain(alloc::format!(
            "{} is outside [0,1]",
            rational::format(x)
        )));
    }
    let top = Letter(r - 1);
    if x.is_one() {
        return Ok(vec![LassoWord::new(vec![], vec![top])]);
    }
    // long division, remembering the position of each remainder
    let q = x.denom().clone();
    let rb = BigInt::from(r);
    let mut rem = x.numer().clone();
    let mut seen: BTreeMap<BigInt, usize> = BTreeMap::new();
    let mut digits: Word = Vec::new();
    let start = loop {
        if let Some(&i) = seen.get(&rem) {
            break i;
        }
        seen.insert(rem.clone(), digits.len());
        let (d, m) = (&rem * &rb).div_rem(&q);
        digits.push(Letter(u32::try_from(d).expect("digit below base")));
        rem = m;
    };
    let cycle = digits.split_off(start);
    let main = LassoWord::new(digits, cycle).canonical();
    let mut out = vec![main.clone()];
    if main.cycle == [Letter(0)] && !main.spoke.is_empty() {
        let mut spoke = main.spoke.clone();
        let last = spoke.last_mut().expect("nonempty spoke");
        last.0 -= 1;
        out.push(LassoWord::new(spoke, vec![top]).canonical());
    }
    out.sort();
    Ok(out)
}

/// Combines one arity-1 lasso per coordinate into a lasso over `alphabet`,
/// padding spokes and aligning cycles by the lcm of their lengths.
pub fn join(alphabet: Alphabet, coords: &[LassoWord]) -> Result<LassoWord> {
    if coords.len() != alphabet.arity() {
        return Err(Error::ArityMismatch {
            left: coords.len(),
            right: alphabet.arity(),
        });
    }
    let s = coords.iter().map(|w| w.spoke.len()).max().unwrap_or(0);
    let c = coords.iter().fold(1usize, |acc, w| acc.lcm(&w.cycle.len()));
    let unrolled: Vec<LassoWord> = coords.iter().map(|w| w.unrolled(s, c)).collect();
    let column = |i: usize| -> Result<Letter> {
        let digits: Vec<u32> = unrolled.iter().map(|w| w.at(i).0).collect();
        alphabet.encode(&digits)
    };
    let spoke = (0..s).map(column).collect::<Result<Word>>()?;
    let cycle = (s..s + c).map(column).collect::<Result<Word>>()?;
    Ok(LassoWord::new(spoke, cycle))
}

/// All joint lassos representing the point `x`; every combination of dual
/// expansions across coordinates is produced.
pub fn representations(alphabet: Alphabet, x: &[Rational]) -> Result<Vec<LassoWord>> {
    if x.len() != alphabet.arity() {
        return Err(Error::ArityMismatch {
            left: x.len(),
            right: alphabet.arity(),
        });
    }
    let per_coord = x
        .iter()
        .map(|xi| expansion(xi, alphabet.base()))
        .collect::<Result<Vec<_>>>()?;
    let mut combos: Vec<Vec<LassoWord>> = vec![Vec::new()];
    for options in &per_coord {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    combos.iter().map(|c| join(alphabet, c)).collect()
}

/// Whether some representation of `x` is accepted.
pub fn member(a: &BuchiAutomaton, x: &[Rational]) -> Result<bool> {
    for w in representations(a.alphabet(), x)? {
        if a.accepts_lasso(&w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The box of points whose expansion starts with a given word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixInterval {
    pub low: Vec<Rational>,
    pub high: Vec<Rational>,
}

pub fn prefix_interval(alphabet: Alphabet, w: &[Letter]) -> PrefixInterval {
    let low = word_value(alphabet, w);
    let width = rational::pow(alphabet.base(), -(w.len() as i64));
    let high = low.iter().map(|l| l + &width).collect();
    PrefixInterval { low, high }
}
