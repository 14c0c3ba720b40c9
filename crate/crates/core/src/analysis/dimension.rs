//! Hausdorff dimension of closed unary regular sets.
//!
//! For a trim closed automaton the distinct prefixes of length `n` are the
//! length-`n` paths of its subset automaton, so their growth rate is the
//! largest spectral radius `λ` among the strongly connected components of that
//! automaton, and the dimension is `log λ / log r`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::automaton::{BuchiAutomaton, State};
use crate::error::{Error, Result};
use crate::graph;

/// Components up to this size get an exact eigenvalue bracket.
pub const EXACT_LIMIT: usize = 12;
pub const DEFAULT_SUBSET_CAP: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct Dimension {
    pub value: f64,
    /// Spectral radius of the prefix growth.
    pub lambda: f64,
    /// Set when `λ` is an integer, certified exactly.
    pub exact_lambda: Option<u64>,
    pub base: u32,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}", self.value)?;
        if let Some(l) = self.exact_lambda {
            write!(f, " = log({l})/log({})", self.base)?;
        }
        Ok(())
    }
}

/// Deterministic subset automaton over nonempty state sets, as a multigraph:
/// `edges[s]` maps each target subset to the number of letters leading there.
pub(crate) fn subset_graph(a: &BuchiAutomaton, cap: usize) -> Result<Vec<BTreeMap<usize, u64>>> {
    let succ = a.successors();
    let start: Vec<State> = a.initial().iter().copied().collect();
    let mut ids: BTreeMap<Vec<State>, usize> = BTreeMap::from([(start.clone(), 0)]);
    let mut sets = vec![start];
    let mut edges: Vec<BTreeMap<usize, u64>> = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        let mut out = BTreeMap::new();
        for (_, target) in BuchiAutomaton::subset_step(&succ, &sets[i]) {
            let next = ids.len();
            let id = *ids.entry(target.clone()).or_insert(next);
            if id == next {
                if sets.len() >= cap {
                    return Err(Error::ResourceLimit {
                        what: "subset states",
                        cap,
                    });
                }
                sets.push(target);
            }
            *out.entry(id).or_insert(0) += 1;
        }
        edges.push(out);
        i += 1;
    }
    Ok(edges)
}

/// Fraction-free elimination without pivoting. Returns whether every leading
/// principal minor is positive.
fn leading_minors_positive(mut m: Vec<Vec<BigInt>>) -> bool {
    let n = m.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    true
}

/// Determinant by fraction-free elimination with row swaps.
fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `num I - den B`.
fn shifted(b: &[Vec<u64>], num: &BigInt, den: &BigInt) -> Vec<Vec<BigInt>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = -(den * BigInt::from(b[i][j]));
                    if i == j {
                        x + num
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect()
}

/// For nonnegative `B`, `ρ(B) < num/den` iff `num I - den B` is a nonsingular
/// M-matrix, i.e. all its leading principal minors are positive.
fn radius_below(b: &[Vec<u64>], num: &BigInt, den: &BigInt) -> bool {
    leading_minors_positive(shifted(b, num, den))
}

/// Spectral radius of an irreducible matrix by exact bisection, plus an
/// integer certificate when the radius is an integer.
fn exact_radius(b: &[Vec<u64>]) -> (f64, Option<u64>) {
    const BITS: u32 = 56;
    let hi_int: u64 = b
        .iter()
        .map(|row| row.iter().sum::<u64>())
        .max()
        .unwrap_or(0);
    let den = BigInt::one() << BITS;
    // bracket [lo, hi) in units of 2^-BITS
    let mut lo = BigInt::zero();
    let mut hi = (BigInt::from(hi_int) + 1u32) << BITS;
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if radius_below(b, &mid, &den) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let estimate = crate::rational::to_f64(&crate::Rational::new(lo.clone(), den.clone()));
    let t = libm::round(estimate);
    let mut exact = None;
    if t >= 0.0 && (estimate - t).abs() < 1e-9 {
        let ti = BigInt::from(t as u64);
        let fine = BigInt::one() << 80u32;
        let just_above = &ti * &fine + 1u32;
        if det(shifted(b, &ti, &BigInt::one())).is_zero() && radius_below(b, &just_above, &fine) {
            exact = Some(t as u64);
        }
    }
    match exact {
        Some(t) => (t as f64, exact),
        None => (estimate, None),
    }
}

/// Collatz–Wielandt bracketing on the primitive matrix `B + I`.
fn power_radius(b: &[Vec<u64>]) -> f64 {
    let n = b.len();
    let mut x = vec![1.0f64; n];
    let (mut lower, mut upper) = (0.0, f64::INFINITY);
    for _ in 0..1_000_000 {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + (0..n).map(|j| b[i][j] as f64 * x[j]).sum::<f64>())
            .collect();
        lower = (0..n).map(|i| y[i] / x[i]).fold(f64::INFINITY, f64::min);
        upper = (0..n).map(|i| y[i] / x[i]).fold(0.0, f64::max);
        let norm = y.iter().cloned().fold(0.0, f64::max);
        x = y.into_iter().map(|v| v / norm).collect();
        if upper - lower <= 1e-13 * upper {
            break;
        }
    }
    (lower + upper) / 2.0 - 1.0
}

/// Growth rate of distinct prefixes together with an integer certificate.
pub(crate) fn prefix_growth(a: &BuchiAutomaton, cap: usize) -> Result<(f64, Option<u64>)> {
    let edges = subset_graph(a, cap)?;
    let adj: Vec<Vec<usize>> = edges.iter().map(|e| e.keys().copied().collect()).collect();
    let sccs = graph::tarjan(&adj);
    let mut best: (f64, Option<u64>) = (0.0, Some(0));
    for c in 0..sccs.count() {
        if !sccs.cyclic[c] {
            continue;
        }
        let members = &sccs.members[c];
        let local: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut b = vec![vec![0u64; members.len()]; members.len()];
        for (i, &s) in members.iter().enumerate() {
            for (t, &k) in &edges[s] {
                if let Some(&j) = local.get(t) {
                    b[i][j] = k;
                }
            }
        }
        let candidate = if members.len() <= EXACT_LIMIT {
            exact_radius(&b)
        } else {
            (power_radius(&b), None)
        };
        if candidate.0 > best.0 {
            best = candidate;
        }
    }
    Ok(best)
}

/// Dimension of the set recognized by a trim closed arity-1 automaton.
pub fn hausdorff_dim(a: &BuchiAutomaton) -> Result<Dimension> {
    hausdorff_dim_capped(a, DEFAULT_SUBSET_CAP)
}

pub fn hausdorff_dim_capped(a: &BuchiAutomaton, cap: usize) -> Result<Dimension> {
    if a.arity() != 1 {
        return Err(Error::Arity(a.arity()));
    }
    if !a.is_trim() {
        return Err(Error::NotTrim);
    }
    if !a.is_closed() {
        return Err(Error::NotClosed);
    }
    let r = a.base();
    let (lambda, exact) = prefix_growth(a, cap)?;
    let value = match exact {
        Some(1) => 0.0,
        Some(l) if l == r as u64 => 1.0,
        _ => (libm::log(lambda) / libm::log(r as f64)).clamp(0.0, 1.0),
    };
    Ok(Dimension {
        value,
        lambda,
        exact_lambda: exact,
        base: r,
    })
}
