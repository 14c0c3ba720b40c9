//! Digit-tuple alphabets `[r]^m`.
//!
//! A letter is a tuple of `m` base-`r` digits. Internally every tuple is packed
//! into a [`Letter`] index with the first coordinate most significant, so the
//! order on letters agrees with the lexicographic order on tuples.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// Packed digit tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

/// A finite word over a digit-tuple alphabet.
pub type Word = Vec<Letter>;

/// An unpacked digit tuple `(d_1, ..., d_m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitTuple(pub Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    base: u32,
    arity: usize,
}

impl Alphabet {
    pub fn new(base: u32, arity: usize) -> Result<Self> {
        if base < 2 {
            return Err(Error::domain("base must be at least 2"));
        }
        if arity == 0 {
            return Err(Error::domain("arity must be at least 1"));
        }
        let size = (base as u64).checked_pow(arity as u32);
        match size {
            Some(s) if s <= u32::MAX as u64 / 2 => Ok(Alphabet { base, arity }),
            _ => Err(Error::domain("alphabet too large")),
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of letters, `r^m`.
    pub fn size(&self) -> u32 {
        self.base.pow(self.arity as u32)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.size()).map(Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.0 < self.size()
    }

    pub fn encode(&self, digits: &[u32]) -> Result<Letter> {
        if digits.len() != self.arity {
            return Err(Error::domain(alloc::format!(
                "tuple has {} digits, arity is {}",
                digits.len(),
                self.arity
            )));
        }
        let mut code = 0u32;
        for &d in digits {
            if d >= self.base {
                return Err(Error::domain(alloc::format!(
                    "digit {d} out of range for base {}",
                    self.base
                )));
            }
            code = code * self.base + d;
        }
        Ok(Letter(code))
    }

    pub fn tuple(&self, digits: &DigitTuple) -> Result<Letter> {
        self.encode(&digits.0)
    }

    pub fn decode(&self, letter: Letter) -> DigitTuple {
        let mut digits = alloc::vec![0u32; self.arity];
        let mut code = letter.0;
        for slot in digits.iter_mut().rev() {
            *slot = code % self.base;
            code /= self.base;
        }
        DigitTuple(digits)
    }

    /// The `i`-th digit (0-based) of a letter.
    pub fn digit(&self, letter: Letter, coord: usize) -> u32 {
        let shift = (self.arity - 1 - coord) as u32;
        (letter.0 / self.base.pow(shift)) % self.base
    }

    /// Encodes a word given as one digit sequence per coordinate; all sequences
    /// must share a length.
    pub fn zip(&self, coords: &[Vec<u32>]) -> Result<Word> {
        if coords.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: coords.len(),
                right: self.arity,
            });
        }
        let len = coords.first().map_or(0, Vec::len);
        if coords.iter().any(|c| c.len() != len) {
            return Err(Error::domain("coordinate words differ in length"));
        }
        (0..len)
            .map(|i| {
                let digits: Vec<u32> = coords.iter().map(|c| c[i]).collect();
                self.encode(&digits)
            })
            .collect()
    }

    /// Parses an arity-1 word written as a run of decimal digits, e.g. `"0120"`.
    /// Only meaningful for bases up to 10.
    pub fn word_from_digits(&self, s: &str) -> Result<Word> {
        if self.arity != 1 {
            return Err(Error::Arity(self.arity));
        }
        s.chars()
            .map(|c| {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::domain(alloc::format!("not a digit: {c:?}")))?;
                self.encode(&[d])
            })
            .collect()
    }

    pub fn format_letter(&self, letter: Letter) -> String {
        let DigitTuple(digits) = self.decode(letter);
        let mut out = String::new();
        for (i, d) in digits.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{d}");
        }
        out
    }

    /// Formats a word so that the regex parser reads it back: compact digits
    /// for arity 1 with base ≤ 10, space-separated tuples otherwise.
    pub fn format_word(&self, word: &[Letter]) -> String {
        let compact = self.arity == 1 && self.base <= 10;
        let mut out = String::new();
        for (i, &l) in word.iter().enumerate() {
            if i > 0 && !compact {
                out.push(' ');
            }
            out.push_str(&self.format_letter(l));
        }
        out
    }
}
