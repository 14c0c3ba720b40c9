//! Ultimately periodic ω-words `spoke · cycle^ω`.

use alloc::vec::Vec;

use crate::alphabet::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LassoWord {
    pub spoke: Word,
    pub cycle: Word,
}

impl LassoWord {
    /// Panics if `cycle` is empty.
    pub fn new(spoke: Word, cycle: Word) -> Self {
        assert!(!cycle.is_empty(), "lasso cycle must be nonempty");
        LassoWord { spoke, cycle }
    }

    /// Letter at position `i` of the infinite word.
    pub fn at(&self, i: usize) -> Letter {
        if i < self.spoke.len() {
            self.spoke[i]
        } else {
            self.cycle[(i - self.spoke.len()) % self.cycle.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Shortest spoke with a primitive cycle. Two lassos denote the same
    /// ω-word iff their canonical forms are equal.
    pub fn canonical(&self) -> LassoWord {
        let mut cycle = primitive_root(&self.cycle).to_vec();
        let mut spoke = self.spoke.clone();
        while let (Some(&s), Some(&c)) = (spoke.last(), cycle.last()) {
            if s != c {
                break;
            }
            spoke.pop();
            cycle.rotate_right(1);
        }
        LassoWord { spoke, cycle }
    }

    /// Re-expresses the word with the given spoke length and a cycle length that
    /// is a multiple of the current one.
    pub fn unrolled(&self, spoke_len: usize, cycle_len: usize) -> LassoWord {
        assert!(spoke_len >= self.spoke.len());
        assert!(cycle_len.is_multiple_of(self.cycle.len()));
        let spoke = self.prefix(spoke_len);
        let cycle = (spoke_len..spoke_len + cycle_len)
            .map(|i| self.at(i))
            .collect();
        LassoWord { spoke, cycle }
    }
}

/// Shortest `p` with `w = p^k`.
pub fn primitive_root(w: &[Letter]) -> &[Letter] {
    let n = w.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| w[i] == w[i - p]) {
            return &w[..p];
        }
    }
    w
}

pub fn power(w: &[Letter], k: usize) -> Word {
    let mut out = Vec::with_capacity(w.len() * k);
    for _ in 0..k {
        out.extend_from_slice(w);
    }
    out
}
