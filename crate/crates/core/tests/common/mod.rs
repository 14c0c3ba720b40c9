#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use realreg_core::sample::{self, SampleRng};
use realreg_core::{Alphabet, Chain, LassoWord, Letter, Rational, SparseNormalForm, Word};

/// Every lasso over `al` with `|spoke| + |cycle| ≤ max_total`.
pub fn all_lassos(al: Alphabet, max_total: usize) -> Vec<LassoWord> {
    let mut out = Vec::new();
    for total in 1..=max_total {
        for c in 1..=total {
            let s = total - c;
            for w in all_words(al, total) {
                out.push(LassoWord::new(w[..s].to_vec(), w[s..].to_vec()));
            }
        }
    }
    out
}

pub fn all_words(al: Alphabet, len: usize) -> Vec<Word> {
    let mut words: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                al.letters().map(move |l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
    }
    words
}

/// Value of `spoke · cycle^ω` digit by digit: the spoke is summed directly
/// and the cycle contributes a geometric series.
pub fn value_oracle(al: Alphabet, w: &LassoWord) -> Vec<Rational> {
    let r = BigInt::from(al.base());
    (0..al.arity())
        .map(|c| {
            let mut x = Rational::zero();
            let mut place = Rational::one();
            for &l in &w.spoke {
                place /= Rational::from_integer(r.clone());
                x += &place * Rational::from_integer(al.digit(l, c).into());
            }
            let mut block = Rational::zero();
            let mut inner = Rational::one();
            for &l in &w.cycle {
                inner /= Rational::from_integer(r.clone());
                block += &inner * Rational::from_integer(al.digit(l, c).into());
            }
            // block + block·r^{-p} + ... = block / (1 - r^{-p})
            x + place * block / (Rational::one() - inner)
        })
        .collect()
}

/// A random chain over `al` of depth `1..=max_depth` with short words.
pub fn random_chain(rng: &mut SampleRng, al: Alphabet, max_depth: usize) -> Chain {
    let d = rng.gen_range(1..=max_depth);
    let parts = (0..d)
        .map(|_| {
            let (lu, lv) = (rng.gen_range(0..=3), rng.gen_range(1..=2));
            let u = sample::random_word(rng, al, lu);
            let v = sample::random_word(rng, al, lv);
            (u, v)
        })
        .collect();
    Chain::new(parts).expect("cycle words are nonempty")
}

pub fn random_sparse_form(rng: &mut SampleRng, al: Alphabet, max_depth: usize) -> SparseNormalForm {
    let k = rng.gen_range(1..=3);
    SparseNormalForm::new(al, (0..k).map(|_| random_chain(rng, al, max_depth)))
}

pub fn word(al: Alphabet, s: &str) -> Vec<Letter> {
    al.word_from_digits(s).unwrap()
}

pub fn lasso(al: Alphabet, spoke: &str, cycle: &str) -> LassoWord {
    LassoWord::new(word(al, spoke), word(al, cycle))
}

/// Deterministic proptest settings: a fixed seed and no failure files.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..proptest::test_runner::Config::default()
    }
}
