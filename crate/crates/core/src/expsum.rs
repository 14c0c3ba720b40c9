//! Exponential-sum descriptions of sparse sets.
//!
//! A chain with coefficients `c_0, ..., c_{d-1}` (vectors in `Q^m`) and steps
//! `δ_1, ..., δ_{d-1}` denotes
//! `{ c_0 + Σ_i c_i r^{-(δ_1 n_1 + ... + δ_i n_i)} : n_i ≥ 0 }`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::lasso::LassoWord;
use crate::normal_form::{normalize_cycle_lengths, SparseNormalForm};
use crate::rational::{self, Rational};
use crate::real::{nu, word_value};

pub type Point = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpChain {
    /// `c_0, ..., c_{d-1}`.
    pub coeffs: Vec<Point>,
    /// `δ_1, ..., δ_{d-1}`.
    pub steps: Vec<u32>,
}

impl ExpChain {
    pub fn new(coeffs: Vec<Point>, steps: Vec<u32>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() != steps.len() + 1 {
            return Err(Error::domain(
                "a chain needs d coefficients and d - 1 steps",
            ));
        }
        if steps.contains(&0) {
            return Err(Error::domain("steps must be positive"));
        }
        let m = coeffs[0].len();
        if m == 0 || coeffs.iter().any(|c| c.len() != m) {
            return Err(Error::domain("coefficient vectors differ in length"));
        }
        Ok(ExpChain { coeffs, steps })
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    pub fn arity(&self) -> usize {
        self.coeffs[0].len()
    }

    /// Drops vanishing coefficients `c_i` (`i ≥ 1`). A vanishing last term is
    /// simply removed; an interior one is merged with the next term when both
    /// steps agree, since then `δ n_i + δ n_{i+1}` ranges over `δN` again.
    pub fn canonical(&self) -> ExpChain {
        let mut coeffs = vec![self.coeffs[0].clone()];
        let mut steps: Vec<u32> = Vec::new();
        // a pending zero term whose variable must fold into the next one
        let mut pending: Option<u32> = None;
        for (c, &s) in self.coeffs[1..].iter().zip(&self.steps) {
            let zero = c.iter().all(Zero::is_zero);
            match pending {
                Some(p) if p != s => {
                    // steps disagree: the zero term cannot be merged away
                    coeffs.push(vec![Rational::zero(); c.len()]);
                    steps.push(p);
                }
                _ => {}
            }
            if zero {
                pending = Some(s);
            } else {
                coeffs.push(c.clone());
                steps.push(s);
                pending = None;
            }
        }
        ExpChain { coeffs, steps }
    }

    pub fn truncate(&self, j: usize) -> ExpChain {
        assert!(j >= 1 && j <= self.depth());
        ExpChain {
            coeffs: self.coeffs[..j].to_vec(),
            steps: self.steps[..j - 1].to_vec(),
        }
    }

    /// Value at the given exponents (`n.len() == d - 1`).
    pub fn value(&self, base: u32, n: &[u64]) -> Point {
        let mut out = self.coeffs[0].clone();
        let mut e: i64 = 0;
        for i in 1..self.depth() {
            e += self.steps[i - 1] as i64 * n[i - 1] as i64;
            let scale = rational::pow(base, -e);
            for (o, c) in out.iter_mut().zip(&self.coeffs[i]) {
                *o += c * &scale;
            }
        }
        out
    }

    /// All values with every `n_i ≤ depth`.
    pub fn enumerate(&self, base: u32, depth: u64, out: &mut BTreeSet<Point>) {
        let k = self.depth() - 1;
        let mut n = vec![0u64; k];
        loop {
            out.insert(self.value(base, &n));
            let mut i = 0;
            while i < k && n[i] == depth {
                n[i] = 0;
                i += 1;
            }
            if i == k {
                return;
            }
            n[i] += 1;
        }
    }

    /// Exact membership test. Each level either has `t = c_i` (and then the
    /// rest must contain zero) or finitely many candidate exponents, bounded by
    /// the size of the remaining tail.
    pub fn contains(&self, base: u32, t: &[Rational]) -> bool {
        if t.len() != self.arity() {
            return false;
        }
        let mut bounds = vec![Rational::zero(); self.depth() + 1];
        for i in (1..self.depth()).rev() {
            let m = self.coeffs[i]
                .iter()
                .map(Signed::abs)
                .max()
                .expect("nonempty vector");
            bounds[i] = &bounds[i + 1] + m;
        }
        self.contains_from(base, 0, t, &bounds)
    }

    fn contains_from(&self, base: u32, i: usize, t: &[Rational], bounds: &[Rational]) -> bool {
        let rest: Point = t.iter().zip(&self.coeffs[i]).map(|(x, c)| x - c).collect();
        if i + 1 == self.depth() {
            return rest.iter().all(Zero::is_zero);
        }
        if rest.iter().all(Zero::is_zero) {
            // zero can only come from n_{i+1} = 0 or from the next levels
            return self.contains_from(base, i + 1, &rest, bounds);
        }
        let step = rational::pow(base, self.steps[i] as i64);
        let mut cur = rest;
        loop {
            let size = cur.iter().map(Signed::abs).max().expect("nonempty vector");
            if size > bounds[i + 1] {
                return false;
            }
            if self.contains_from(base, i + 1, &cur, bounds) {
                return true;
            }
            for x in cur.iter_mut() {
                *x *= &step;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSumDescription {
    pub base: u32,
    pub arity: usize,
    pub chains: Vec<ExpChain>,
}

impl ExpSumDescription {
    /// Canonicalizes every chain, then sorts and deduplicates.
    pub fn new(
        base: u32,
        arity: usize,
        chains: impl IntoIterator<Item = ExpChain>,
    ) -> Result<Self> {
        Alphabet::new(base, arity)?;
        let mut set = BTreeSet::new();
        for c in chains {
            if c.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: c.arity(),
                    right: arity,
                });
            }
            set.insert(c.canonical());
        }
        Ok(ExpSumDescription {
            base,
            arity,
            chains: set.into_iter().collect(),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.chains.iter().map(ExpChain::depth).max().unwrap_or(0)
    }

    pub fn enumerate_points(&self, depth: u64) -> BTreeSet<Point> {
        let mut out = BTreeSet::new();
        for c in &self.chains {
            c.enumerate(self.base, depth, &mut out);
        }
        out
    }

    pub fn contains(&self, t: &[Rational]) -> bool {
        self.chains.iter().any(|c| c.contains(self.base, t))
    }

    /// Whether the description is closed under taking truncations, i.e. it
    /// denotes a closed set.
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&ExpChain> = self.chains.iter().collect();
        self.chains
            .iter()
            .all(|c| (1..c.depth()).all(|j| set.contains(&c.truncate(j))))
    }

    /// Adds every truncation of every chain.
    pub fn closure(&self) -> ExpSumDescription {
        let chains = self
            .chains
            .iter()
            .flat_map(|c| (1..=c.depth()).map(move |j| c.truncate(j)));
        ExpSumDescription::new(self.base, self.arity, chains).expect("same base and arity")
    }
}

/// Exact coefficients for every chain of `f`, after normalizing cycle
/// lengths.
///
/// With `g_i = ν(v_i^ω)`, `a_i = val(u_i) + r^{-|u_i|} g_i` and
/// `b_i = r^{-|u_i|}`, the word `u_1 v_1^{n_1} ... u_d v_d^ω` has value
/// `a_1 + Σ_{i<d} (b_1 ... b_i)(a_{i+1} - g_i) r^{-δ(n_1 + ... + n_i)}`.
pub fn to_exp_sum(f: &SparseNormalForm) -> ExpSumDescription {
    let al = f.alphabet;
    let r = al.base();
    let normal = normalize_cycle_lengths(f);
    let chains = normal.chains.iter().map(|chain| {
        let parts = chain.parts();
        let g: Vec<Point> = parts
            .iter()
            .map(|(_, v)| nu(al, &LassoWord::new(Vec::new(), v.clone())))
            .collect();
        let a: Vec<Point> = parts
            .iter()
            .zip(&g)
            .map(|((u, _), gi)| {
                let b = rational::pow(r, -(u.len() as i64));
                word_value(al, u)
                    .into_iter()
                    .zip(gi)
                    .map(|(x, y)| x + &b * y)
                    .collect()
            })
            .collect();
        let mut coeffs = vec![a[0].clone()];
        let mut prod = Rational::one();
        for i in 0..parts.len() - 1 {
            prod *= rational::pow(r, -(parts[i].0.len() as i64));
            coeffs.push(
                a[i + 1]
                    .iter()
                    .zip(&g[i])
                    .map(|(x, y)| &prod * (x - y))
                    .collect(),
            );
        }
        let delta = parts[0].1.len() as u32;
        let steps = vec![delta; parts.len() - 1];
        ExpChain { coeffs, steps }
    });
    ExpSumDescription::new(r, al.arity(), chains).expect("alphabet already validated")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::Chain;
    use crate::rational::{frac, int};

    fn chain(al: Alphabet, parts: &[(&str, &str)]) -> Chain {
        Chain::new(
            parts
                .iter()
                .map(|(u, v)| {
                    (
                        al.word_from_digits(u).unwrap(),
                        al.word_from_digits(v).unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    fn unary(c: &[Rational], steps: &[u32]) -> ExpChain {
        ExpChain::new(c.iter().map(|x| vec![x.clone()]).collect(), steps.to_vec()).unwrap()
    }

    #[test]
    fn dyadic_points_description() {
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "0"), ("1", "0")])]);
        let e = to_exp_sum(&f);
        assert_eq!(e.chains, vec![unary(&[int(0), frac(1, 2)], &[1])]);
    }

    #[test]
    fn constant_chain() {
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "1")])]);
        assert_eq!(to_exp_sum(&f).chains, vec![unary(&[int(1)], &[])]);
    }

    #[test]
    fn periodic_chain_denominators() {
        // (01)* 10 (01)^ω
        let al = Alphabet::new(2, 1).unwrap();
        let f = SparseNormalForm::new(al, [chain(al, &[("", "01"), ("10", "01")])]);
        let e = to_exp_sum(&f);
        for c in &e.chains {
            for x in c.coeffs.iter().flatten() {
                assert!(
                    (x * Rational::from_integer(3.into()) * Rational::from_integer(16.into()))
                        .is_integer()
                );
            }
        }
        let pts = e.enumerate_points(3);
        let direct: BTreeSet<Point> = f.chains[0].lassos(3).iter().map(|w| nu(al, w)).collect();
        assert_eq!(pts, direct);
    }

    #[test]
    fn enumeration_examples() {
        let e = ExpSumDescription::new(2, 1, [unary(&[int(0), int(1)], &[1])]).unwrap();
        let pts: Vec<Point> = e.enumerate_points(3).into_iter().collect();
        assert_eq!(
            pts,
            vec![
                vec![frac(1, 8)],
                vec![frac(1, 4)],
                vec![frac(1, 2)],
                vec![int(1)]
            ]
        );
        let c = ExpSumDescription::new(3, 1, [unary(&[frac(1, 3)], &[])]).unwrap();
        assert_eq!(c.enumerate_points(10).len(), 1);
        // 2^{-n} + 2^{-n-m-1}
        let two =
            ExpSumDescription::new(2, 1, [unary(&[int(0), int(1), frac(1, 2)], &[1, 1])]).unwrap();
        let brute: BTreeSet<Point> = (0..=1)
            .flat_map(|n| {
                (0..=1).map(move |m| vec![rational::pow(2, -n) + rational::pow(2, -n - m - 1)])
            })
            .collect();
        assert_eq!(two.enumerate_points(1), brute);
        assert_eq!(brute.len(), 4);
    }

    #[test]
    fn canonical_drops_zero_terms() {
        let c = unary(&[int(0), int(0), frac(1, 2)], &[2, 2]).canonical();
        assert_eq!(c, unary(&[int(0), frac(1, 2)], &[2]));
        let c = unary(&[int(0), frac(1, 2), int(0)], &[1, 3]).canonical();
        assert_eq!(c, unary(&[int(0), frac(1, 2)], &[1]));
        let c = unary(&[int(0), int(0), frac(1, 2)], &[1, 2]).canonical();
        assert_eq!(c.depth(), 3);
    }

    #[test]
    fn exact_membership() {
        let three = unary(&[int(0), frac(1, 2), frac(1, 4)], &[1, 1]);
        let pts = {
            let mut s = BTreeSet::new();
            three.enumerate(2, 6, &mut s);
            s
        };
        for p in &pts {
            assert!(three.contains(2, p));
        }
        assert!(three.contains(2, &[rational::pow(2, -41) + rational::pow(2, -43)]));
        assert!(!three.contains(2, &[rational::pow(2, -41)]));
        assert!(!three.contains(2, &[frac(1, 3)]));
        assert!(!three.contains(2, &[int(0)]));
        assert!(three.contains(2, &[frac(3, 4)]));
        assert!(!three.contains(2, &[int(1)]));
    }

    #[test]
    fn closure_is_closed() {
        let e = ExpSumDescription::new(2, 1, [unary(&[int(0), frac(1, 2), frac(1, 4)], &[1, 1])])
            .unwrap();
        assert!(!e.is_closed());
        let c = e.closure();
        assert!(c.is_closed());
        assert_eq!(c.chains.len(), 3);
    }
}
