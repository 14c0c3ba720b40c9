//! Intersections of sparse sets written in two multiplicatively independent
//! bases.
//!
//! The intersection is always finite, but the underlying S-unit bound is not
//! effective, so every search here is exhaustive only up to a height `H` on
//! the exponents.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expsum::{ExpChain, ExpSumDescription, Point};
use crate::rational::{self, Rational};

pub const DEFAULT_HEIGHT: u64 = 60;
pub const DEFAULT_NODE_CAP: usize = 5_000_000;

fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// `k^a = l^b` only for `a = b = 0`: the exponent vectors of `k` and `l` are
/// not proportional.
pub fn mult_independent(k: u64, l: u64) -> bool {
    assert!(k >= 2 && l >= 2, "bases must be at least 2");
    let fk = factorize(k);
    let fl = factorize(l);
    if fk.keys().ne(fl.keys()) {
        return true;
    }
    // same primes: proportional iff every cross product agrees
    let (p0, &a0) = fk.iter().next().expect("k ≥ 2 has a prime factor");
    let b0 = fl[p0];
    fk.iter()
        .any(|(p, &a)| a as u64 * b0 as u64 != fl[p] as u64 * a0 as u64)
}

/// Natural logarithm of a large bound, with the argument of its `exp` kept
/// exact.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundValue {
    /// May be infinite when the exact argument exceeds the `f64` range.
    pub log: f64,
    pub exp_argument: BigUint,
    pub formula: String,
}

/// `3 (6 n)^{e}` as an exact integer.
fn exp_argument(n: u64, e: u64) -> BigUint {
    BigUint::from(3u32) * BigUint::from(6 * n).pow(e as u32)
}

fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `ln(2^{s+t+1} (s+t+2)^{s+t+2} exp(3(6(s+t+1))^{3(s+t+1)}))`.
pub fn intersection_bound_log(s: u64, t: u64) -> BoundValue {
    let n = s + t;
    let arg = exp_argument(n + 1, 3 * (n + 1));
    let log = (n + 1) as f64 * ln(2.0)
        + (n + 2) as f64 * ln((n + 2) as f64)
        + arg.to_f64().unwrap_or(f64::INFINITY);
    BoundValue {
        log,
        formula: format!(
            "{}·ln2 + {}·ln{} + 3·{}^{}",
            n + 1,
            n + 2,
            n + 2,
            6 * (n + 1),
            3 * (n + 1)
        ),
        exp_argument: arg,
    }
}

/// The count of nondegenerate solutions as stated at the lemma itself:
/// `exp(3(6(n+m))^{3n+3m})`.
pub fn nondegenerate_bound_log(n: u64, m: u64) -> BoundValue {
    let arg = exp_argument(n + m, 3 * (n + m));
    BoundValue {
        log: arg.to_f64().unwrap_or(f64::INFINITY),
        formula: format!("3·{}^{}", 6 * (n + m), 3 * (n + m)),
        exp_argument: arg,
    }
}

/// The blockwise bound `(n+m+2)^{n+m+2} exp(3(6(n+m+1))^{3(n+m+1)})`.
pub fn block_bound_log(n: u64, m: u64) -> BoundValue {
    let k = n + m;
    let arg = exp_argument(k + 1, 3 * (k + 1));
    BoundValue {
        log: (k + 2) as f64 * ln((k + 2) as f64) + arg.to_f64().unwrap_or(f64::INFINITY),
        formula: format!("{}·ln{} + 3·{}^{}", k + 2, k + 2, 6 * (k + 1), 3 * (k + 1)),
        exp_argument: arg,
    }
}

/// Bound from automaton sizes alone: a set recognized with `a` states in base
/// `k` is a union of at most `k^a` simple sets of length at most `a`.
pub fn state_count_bound_log(k: u64, a: u64, l: u64, b: u64) -> f64 {
    a as f64 * ln(k as f64) + b as f64 * ln(l as f64) + intersection_bound_log(a, b).log
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + ln(xs.iter().map(|x| libm::exp(x - max)).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBaseProblem {
    pub s: ExpSumDescription,
    pub t: ExpSumDescription,
    pub height: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionReport {
    /// Sorted ascending.
    pub values: Vec<Point>,
    pub height: u64,
    /// The search covers every exponent up to `height`; nothing is claimed
    /// beyond it.
    pub complete_up_to_height: bool,
    /// Log of the sum of the pairwise cardinality bounds.
    pub bound_log: f64,
}

fn points(e: &ExpSumDescription, height: u64, cap: usize) -> Result<BTreeSet<Point>> {
    let mut budget = cap;
    let mut out = BTreeSet::new();
    for c in &e.chains {
        let count = (height + 1)
            .checked_pow(c.depth() as u32 - 1)
            .and_then(|n| usize::try_from(n).ok())
            .filter(|&n| n <= budget)
            .ok_or(Error::ResourceLimit {
                what: "intersection points",
                cap,
            })?;
        budget -= count;
        c.enumerate(e.base, height, &mut out);
    }
    Ok(out)
}

pub fn intersect_sparse(p: &TwoBaseProblem) -> Result<IntersectionReport> {
    intersect_sparse_capped(p, DEFAULT_NODE_CAP)
}

pub fn intersect_sparse_capped(p: &TwoBaseProblem, cap: usize) -> Result<IntersectionReport> {
    let (k, l) = (p.s.base as u64, p.t.base as u64);
    if p.s.arity != p.t.arity {
        return Err(Error::ArityMismatch {
            left: p.s.arity,
            right: p.t.arity,
        });
    }
    if !mult_independent(k, l) {
        return Err(Error::DependentBases { k, l });
    }
    let left = points(&p.s, p.height, cap)?;
    let right = points(&p.t, p.height, cap)?;
    let values: Vec<Point> = left.intersection(&right).cloned().collect();
    let logs: Vec<f64> =
        p.s.chains
            .iter()
            .flat_map(|a| {
                p.t.chains.iter().map(move |b| {
                    intersection_bound_log(a.depth() as u64 - 1, b.depth() as u64 - 1).log
                })
            })
            .collect();
    let bound_log = log_sum_exp(&logs);
    assert!(
        values.is_empty() || ln(values.len() as f64) <= bound_log,
        "intersection exceeds its cardinality bound"
    );
    Ok(IntersectionReport {
        values,
        height: p.height,
        complete_up_to_height: true,
        bound_log,
    })
}

/// The `i`-th coordinate (1-based) of a description.
pub fn project_description(e: &ExpSumDescription, i: usize) -> Result<ExpSumDescription> {
    if i == 0 || i > e.arity {
        return Err(Error::IndexOutOfRange {
            index: i,
            arity: e.arity,
        });
    }
    let chains = e.chains.iter().map(|c| ExpChain {
        coeffs: c.coeffs.iter().map(|x| vec![x[i - 1].clone()]).collect(),
        steps: c.steps.clone(),
    });
    ExpSumDescription::new(e.base, 1, chains)
}

/// Exponent tuples of one block whose terms have no vanishing subsum, keyed
/// by the block's sum.
fn block_sums(
    coeffs: &[Rational],
    base: u64,
    height: u64,
    budget: &mut usize,
    cap: usize,
) -> Result<BTreeMap<Rational, Vec<Vec<i64>>>> {
    let h = height as i64;
    let powers: Vec<Rational> = (-h..=h).map(|e| rational::pow(base as u32, e)).collect();
    let width = powers.len();
    let total = width.checked_pow(coeffs.len() as u32).unwrap_or(usize::MAX);
    if total > *budget {
        return Err(Error::ResourceLimit {
            what: "s-unit search nodes",
            cap,
        });
    }
    *budget -= total;
    let mut out: BTreeMap<Rational, Vec<Vec<i64>>> = BTreeMap::new();
    let mut idx = vec![0usize; coeffs.len()];
    loop {
        let terms: Vec<Rational> = idx
            .iter()
            .zip(coeffs)
            .map(|(&i, a)| a * &powers[i])
            .collect();
        let nondegenerate = (1u64..1 << terms.len()).all(|mask| {
            let sum: Rational = (0..terms.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| terms[b].clone())
                .sum();
            !sum.is_zero()
        });
        if nondegenerate {
            let sum: Rational = terms.into_iter().sum();
            out.entry(sum)
                .or_default()
                .push(idx.iter().map(|&i| i as i64 - h).collect());
        }
        let mut j = 0;
        while j < idx.len() && idx[j] + 1 == width {
            idx[j] = 0;
            j += 1;
        }
        if j == idx.len() {
            return Ok(out);
        }
        idx[j] += 1;
    }
}

/// Exponent tuples `(e_0, ..., e_{n+m+1})` with `|e_i| ≤ height` solving
/// `Σ a_i X_i = 0`, where `X_i = k^{e_i}` for `i ≤ n` and `X_i = l^{e_i}`
/// otherwise, and neither block has a vanishing nonempty subsum.
pub fn sunit_solutions(
    coeffs: &[Rational],
    n: usize,
    k: u64,
    l: u64,
    height: u64,
) -> Result<Vec<Vec<i64>>> {
    if !mult_independent(k, l) {
        return Err(Error::DependentBases { k, l });
    }
    if n + 2 > coeffs.len() {
        return Err(Error::domain("both blocks need at least one variable"));
    }
    if coeffs.iter().any(Zero::is_zero) {
        return Err(Error::domain("coefficients must be nonzero"));
    }
    let cap = DEFAULT_NODE_CAP;
    let mut budget = cap;
    let left = block_sums(&coeffs[..=n], k, height, &mut budget, cap)?;
    let right = block_sums(&coeffs[n + 1..], l, height, &mut budget, cap)?;
    let mut out = Vec::new();
    for (sum, tuples) in &right {
        if let Some(matches) = left.get(&-sum.clone()) {
            for a in matches {
                for b in tuples {
                    let mut t = a.clone();
                    t.extend_from_slice(b);
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    let m = (coeffs.len() - n - 2) as u64;
    assert!(
        out.is_empty() || ln(out.len() as f64) <= block_bound_log(n as u64, m).log,
        "solution count exceeds its bound"
    );
    Ok(out)
}
